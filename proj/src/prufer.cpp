#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

#include "steinermat/tree.hpp"

namespace steinermat {

Tree tree_from_prufer(int num_vertices, std::span<const int> sequence) {
  if (num_vertices < 2) throw std::invalid_argument("Pruefer decoding needs N >= 2");
  if (static_cast<int>(sequence.size()) != num_vertices - 2) {
    throw std::invalid_argument("Pruefer sequence must have length N-2");
  }
  std::vector<int> degree(num_vertices, 1);
  for (int s : sequence) {
    if (s < 0 || s >= num_vertices) throw std::invalid_argument("Pruefer entry out of range");
    ++degree[s];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < num_vertices; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(num_vertices - 1);
  for (int s : sequence) {
    int leaf = leaves.top();
    leaves.pop();
    edges.push_back({std::min(leaf, s), std::max(leaf, s)});
    if (--degree[s] == 1) leaves.push(s);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.push_back({std::min(a, b), std::max(a, b)});
  return Tree::from_edges(num_vertices, edges);
}

LabeledTreeEnumerator::LabeledTreeEnumerator(int num_vertices, int max_vertices)
    : num_vertices_(num_vertices), count_(1) {
  if (num_vertices < 2) throw std::invalid_argument("labeled tree enumeration needs N >= 2");
  if (num_vertices > max_vertices) {
    throw std::invalid_argument("labeled tree enumeration capped at N = " +
                                std::to_string(max_vertices) + " (requested " +
                                std::to_string(num_vertices) + ")");
  }
  for (int i = 0; i < num_vertices - 2; ++i) count_ *= static_cast<std::uint64_t>(num_vertices);
}

std::vector<int> LabeledTreeEnumerator::prufer_at(std::uint64_t index) const {
  if (index >= count_) throw std::out_of_range("labeled tree index out of range");
  // Most significant digit first, so increasing index is lexicographic order.
  std::vector<int> seq(num_vertices_ - 2);
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    *it = static_cast<int>(index % num_vertices_);
    index /= num_vertices_;
  }
  return seq;
}

Tree LabeledTreeEnumerator::tree_at(std::uint64_t index) const {
  return tree_from_prufer(num_vertices_, prufer_at(index));
}

std::vector<Tree> enumerate_labeled_trees(int num_vertices, int max_vertices) {
  LabeledTreeEnumerator e(num_vertices, max_vertices);
  std::vector<Tree> out;
  out.reserve(e.size());
  e.for_each([&](std::uint64_t, Tree t) { out.push_back(std::move(t)); });
  return out;
}

}  // namespace steinermat
