#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace steinermat::oracle {

std::size_t naive_rank(const RationalMatrix& input) {
  RationalMatrix a = input;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

Rational cofactor_det(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  Rational total;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c).is_zero()) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0, k = 0; j < n; ++j) {
        if (j != c) minor(i - 1, k++) = a(i, j);
      }
    }
    Rational term = a(0, c) * cofactor_det(minor);
    total = c % 2 ? total - term : total + term;
  }
  return total;
}

int brute_steiner(const Tree& t, const VertexSet& x) {
  const int num = t.num_vertices();
  unsigned required = 0;
  for (int v : x.labels()) required |= 1u << v;
  int best = num;
  for (unsigned mask = 0; mask < (1u << num); ++mask) {
    if ((mask & required) != required) continue;
    int size = std::popcount(mask);
    if (size >= best) continue;
    int start = std::countr_zero(mask);
    unsigned seen = 1u << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : t.neighbors(v)) {
        if ((mask >> w & 1u) && !(seen >> w & 1u)) {
          seen |= 1u << w;
          stack.push_back(w);
        }
      }
    }
    if (seen == mask) best = size;
  }
  return best - 1;
}

Tree random_tree(std::mt19937& rng, int num_vertices) {
  if (num_vertices == 1) return Tree::from_edges(1, {});
  if (num_vertices == 2) {
    Edge e{0, 1};
    return Tree::from_edges(2, std::span<const Edge>(&e, 1));
  }
  std::uniform_int_distribution<int> label(0, num_vertices - 1);
  std::vector<int> seq(num_vertices - 2);
  for (int& s : seq) s = label(rng);
  return tree_from_prufer(num_vertices, seq);
}

CaterpillarSpec random_spec(std::mt19937& rng, int max_n, int max_leaves_per_vertex) {
  int n = std::uniform_int_distribution<int>(2, max_n)(rng);
  std::uniform_int_distribution<int> leaves(0, max_leaves_per_vertex);
  std::vector<int> counts(n - 1);
  for (int& c : counts) c = leaves(rng);
  return CaterpillarSpec(n, counts);
}

VertexSet random_subset(std::mt19937& rng, int num_vertices, int size) {
  std::vector<int> all(num_vertices);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(size);
  return VertexSet(all);
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t rank_cap) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  auto fill = [&](std::size_t r, std::size_t c) {
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(num(rng), den(rng));
    }
    return m;
  };
  if (rank_cap == 0) return fill(rows, cols);
  return multiply(fill(rows, rank_cap), fill(rank_cap, cols));
}

namespace {

RationalMatrix square(std::size_t n, std::initializer_list<int> values) {
  std::vector<int> v(values);
  return RationalMatrix::from_integers(n, n, v);
}

}  // namespace

RationalMatrix p4_golden() {
  return square(10, {1, 2, 3, 4, 4, 4, 4, 2, 3, 3,  //
                     2, 2, 3, 4, 4, 4, 4, 2, 3, 3,  //
                     3, 3, 3, 4, 4, 4, 4, 3, 3, 3,  //
                     4, 4, 4, 4, 4, 4, 4, 4, 4, 4,  //
                     4, 4, 4, 4, 3, 3, 3, 3, 3, 3,  //
                     4, 4, 4, 4, 3, 2, 2, 3, 3, 2,  //
                     4, 4, 4, 4, 3, 2, 1, 3, 3, 2,  //
                     2, 2, 3, 4, 3, 3, 3, 1, 2, 2,  //
                     3, 3, 3, 4, 3, 3, 3, 2, 2, 2,  //
                     3, 3, 3, 4, 3, 2, 2, 2, 2, 1});
}

std::vector<VertexSet> p4_golden_order() {
  return {VertexSet{0, 1}, VertexSet{0, 2}, VertexSet{0, 3}, VertexSet{0, 4}, VertexSet{1, 4},
          VertexSet{2, 4}, VertexSet{3, 4}, VertexSet{1, 2}, VertexSet{1, 3}, VertexSet{2, 3}};
}

RationalMatrix caterpillar_golden() {
  return square(10, {1, 2, 3, 4, 4, 4, 4, 2, 3, 3,  //
                     2, 2, 3, 4, 4, 4, 4, 3, 3, 3,  //
                     3, 3, 3, 4, 4, 4, 4, 4, 4, 4,  //
                     4, 4, 4, 4, 4, 4, 4, 5, 5, 5,  //
                     4, 4, 4, 4, 3, 3, 3, 5, 5, 5,  //
                     4, 4, 4, 4, 3, 2, 2, 5, 5, 5,  //
                     4, 4, 4, 4, 3, 2, 1, 5, 5, 5,  //
                     2, 3, 4, 5, 5, 5, 5, 2, 4, 4,  //
                     3, 3, 4, 5, 5, 5, 5, 4, 3, 4,  //
                     3, 3, 4, 5, 5, 5, 5, 4, 4, 3});
}

std::vector<VertexSet> caterpillar_golden_x() {
  return {VertexSet{0, 1}, VertexSet{0, 2}, VertexSet{0, 3}, VertexSet{0, 4}, VertexSet{1, 4},
          VertexSet{2, 4}, VertexSet{3, 4}, VertexSet{0, 5}, VertexSet{0, 6}, VertexSet{0, 7}};
}

CaterpillarSpec sample_spec() { return CaterpillarSpec(4, {1, 2, 0}); }

}  // namespace steinermat::oracle
