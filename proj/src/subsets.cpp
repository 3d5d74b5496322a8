#include <stdexcept>

#include "steinermat/dk.hpp"

namespace steinermat {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / i;
  return out;
}

SubsetTable::SubsetTable(int num_vertices, int k) : num_vertices_(num_vertices), k_(k) {
  if (k < 1 || k > num_vertices) {
    throw std::invalid_argument("subset size k=" + std::to_string(k) + " outside 1.." +
                                std::to_string(num_vertices));
  }
  subsets_.reserve(binomial(num_vertices, k));
  std::vector<int> current(k);
  for (int i = 0; i < k; ++i) current[i] = i;
  while (true) {
    subsets_.emplace_back(current);
    int i = k - 1;
    while (i >= 0 && current[i] == num_vertices - k + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
}

std::size_t SubsetTable::index_of(const VertexSet& s) const {
  if (s.size() != k_ || s.back() >= num_vertices_) {
    throw std::out_of_range("'" + s.to_string() + "' is not a " + std::to_string(k_) +
                            "-subset of " + std::to_string(num_vertices_) + " vertices");
  }
  // Count the subsets that precede s: at position i, every smaller value
  // v in (prev, s_i) opens a block of C(N-1-v, k-1-i) subsets.
  std::uint64_t index = 0;
  int prev = -1;
  auto labels = s.labels();
  for (int i = 0; i < k_; ++i) {
    for (int v = prev + 1; v < labels[i]; ++v) index += binomial(num_vertices_ - 1 - v, k_ - 1 - i);
    prev = labels[i];
  }
  return static_cast<std::size_t>(index);
}

}  // namespace steinermat
