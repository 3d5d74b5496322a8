#include <stdexcept>

#include "steinermat/matrix.hpp"

namespace steinermat {

RationalMatrix path_laplacian(std::size_t m) {
  if (m == 0) throw std::invalid_argument("path_laplacian: need at least one vertex");
  RationalMatrix l(m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    l(i, i + 1) = -1;
    l(i + 1, i) = -1;
    l(i, i) += 1;
    l(i + 1, i + 1) += 1;
  }
  return l;
}

RationalMatrix laplacian(const Tree& t) {
  const auto n = static_cast<std::size_t>(t.num_vertices());
  RationalMatrix l(n, n);
  for (int v = 0; v < t.num_vertices(); ++v) {
    l(v, v) = t.degree(v);
    for (int w : t.neighbors(v)) l(v, w) = -1;
  }
  return l;
}

}  // namespace steinermat
