#include <algorithm>
#include <set>
#include <stdexcept>

#include "steinermat/dk.hpp"

namespace steinermat {

LabeledMatrix::LabeledMatrix(RationalMatrix matrix, std::vector<VertexSet> row_labels,
                             std::vector<VertexSet> col_labels)
    : matrix_(std::move(matrix)), row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
  if (row_labels_.size() != matrix_.rows() || col_labels_.size() != matrix_.cols()) {
    throw std::invalid_argument("label count does not match matrix dimensions");
  }
  for (std::size_t i = 0; i < row_labels_.size(); ++i) {
    if (!row_lookup_.emplace(row_labels_[i], i).second) {
      throw std::invalid_argument("duplicate row label " + row_labels_[i].to_string());
    }
  }
  for (std::size_t i = 0; i < col_labels_.size(); ++i) {
    if (!col_lookup_.emplace(col_labels_[i], i).second) {
      throw std::invalid_argument("duplicate column label " + col_labels_[i].to_string());
    }
  }
}

std::optional<std::size_t> LabeledMatrix::row_index(const VertexSet& label) const {
  auto it = row_lookup_.find(label);
  if (it == row_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> LabeledMatrix::col_index(const VertexSet& label) const {
  auto it = col_lookup_.find(label);
  if (it == col_lookup_.end()) return std::nullopt;
  return it->second;
}

const Rational& LabeledMatrix::at(const VertexSet& row, const VertexSet& col) const {
  auto r = row_index(row);
  auto c = col_index(col);
  if (!r) throw std::out_of_range("unknown row label " + row.to_string());
  if (!c) throw std::out_of_range("unknown column label " + col.to_string());
  return matrix_(*r, *c);
}

LabeledMatrix build_dk(const Tree& t, int k, std::span<const VertexSet> order) {
  if (k < 1 || k > t.num_vertices()) {
    throw std::invalid_argument("k=" + std::to_string(k) + " outside 1.." +
                                std::to_string(t.num_vertices()));
  }
  if (order.empty()) throw std::invalid_argument("empty index order");
  for (const VertexSet& s : order) {
    if (s.size() != k || s.back() >= t.num_vertices()) {
      throw std::invalid_argument("'" + s.to_string() + "' is not a " + std::to_string(k) +
                                  "-subset of the vertices");
    }
  }
  const std::size_t size = order.size();
  RationalMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i; j < size; ++j) {
      Rational d(steiner_distance(t, order[i].united(order[j])));
      m(j, i) = d;
      m(i, j) = std::move(d);
    }
  }
  std::vector<VertexSet> labels(order.begin(), order.end());
  return LabeledMatrix(std::move(m), labels, labels);
}

LabeledMatrix build_dk(const Tree& t, int k) {
  if (k < 1 || k > t.num_vertices()) {
    throw std::invalid_argument("k=" + std::to_string(k) + " outside 1.." +
                                std::to_string(t.num_vertices()));
  }
  SubsetTable table(t.num_vertices(), k);
  return build_dk(t, k, table.subsets());
}

std::vector<VertexSet> path_x(int n) {
  if (n < 1) throw std::invalid_argument("path_x needs n >= 1");
  std::vector<VertexSet> x;
  for (int a = 1; a <= n; ++a) x.push_back(VertexSet{0, a});
  for (int a = 1; a <= n - 1; ++a) x.push_back(VertexSet{a, n});
  return x;
}

std::vector<VertexSet> canonical_x(const CaterpillarSpec& spec) {
  std::vector<VertexSet> x = path_x(spec.n());
  for (int leaf = spec.n() + 1; leaf < spec.num_vertices(); ++leaf) x.push_back(VertexSet{0, leaf});
  return x;
}

std::vector<VertexSet> complement_pairs(int num_vertices, std::span<const VertexSet> x) {
  std::set<VertexSet> taken(x.begin(), x.end());
  std::vector<VertexSet> out;
  const SubsetTable pairs(num_vertices, 2);
  for (const VertexSet& s : pairs.subsets()) {
    if (!taken.contains(s)) out.push_back(s);
  }
  return out;
}

std::vector<VertexSet> canonical_first_order(const CaterpillarSpec& spec) {
  std::vector<VertexSet> order = canonical_x(spec);
  std::vector<VertexSet> rest = complement_pairs(spec.num_vertices(), order);
  order.insert(order.end(), rest.begin(), rest.end());
  return order;
}

LabeledMatrix submatrix(const LabeledMatrix& m, std::span<const VertexSet> rows,
                        std::span<const VertexSet> cols) {
  if (rows.empty() || cols.empty()) throw std::invalid_argument("submatrix: empty selection");
  std::vector<std::size_t> ri;
  std::vector<std::size_t> ci;
  for (const VertexSet& r : rows) {
    auto idx = m.row_index(r);
    if (!idx) throw std::out_of_range("submatrix: unknown row label " + r.to_string());
    ri.push_back(*idx);
  }
  for (const VertexSet& c : cols) {
    auto idx = m.col_index(c);
    if (!idx) throw std::out_of_range("submatrix: unknown column label " + c.to_string());
    ci.push_back(*idx);
  }
  RationalMatrix out(ri.size(), ci.size());
  for (std::size_t i = 0; i < ri.size(); ++i) {
    for (std::size_t j = 0; j < ci.size(); ++j) out(i, j) = m.matrix()(ri[i], ci[j]);
  }
  return LabeledMatrix(std::move(out), std::vector<VertexSet>(rows.begin(), rows.end()),
                       std::vector<VertexSet>(cols.begin(), cols.end()));
}

}  // namespace steinermat
