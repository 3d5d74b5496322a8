#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "steinermat/matrix.hpp"
#include "steinermat/steiner.hpp"
#include "steinermat/tree.hpp"

namespace steinermat {

std::uint64_t binomial(int n, int k);

/// All k-subsets of {0..N-1} in lexicographic order, with the inverse map
/// given by the combinatorial number system.
class SubsetTable {
 public:
  /// Throws std::invalid_argument unless 1 <= k <= N.
  SubsetTable(int num_vertices, int k);

  int num_vertices() const noexcept { return num_vertices_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return subsets_.size(); }
  const std::vector<VertexSet>& subsets() const noexcept { return subsets_; }
  const VertexSet& at(std::size_t index) const { return subsets_.at(index); }

  /// Lexicographic rank. Throws std::out_of_range if s is not a k-subset.
  std::size_t index_of(const VertexSet& s) const;

 private:
  int num_vertices_;
  int k_;
  std::vector<VertexSet> subsets_;
};

/// Rational matrix whose rows and columns are tagged with vertex sets.
class LabeledMatrix {
 public:
  LabeledMatrix(RationalMatrix matrix, std::vector<VertexSet> row_labels,
                std::vector<VertexSet> col_labels);

  const RationalMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<VertexSet>& row_labels() const noexcept { return row_labels_; }
  const std::vector<VertexSet>& col_labels() const noexcept { return col_labels_; }

  std::optional<std::size_t> row_index(const VertexSet& label) const;
  std::optional<std::size_t> col_index(const VertexSet& label) const;

  /// Entry by labels; throws std::out_of_range for unknown labels.
  const Rational& at(const VertexSet& row, const VertexSet& col) const;

  bool operator==(const LabeledMatrix& o) const {
    return matrix_ == o.matrix_ && row_labels_ == o.row_labels_ && col_labels_ == o.col_labels_;
  }

 private:
  RationalMatrix matrix_;
  std::vector<VertexSet> row_labels_;
  std::vector<VertexSet> col_labels_;
  std::map<VertexSet, std::size_t> row_lookup_;
  std::map<VertexSet, std::size_t> col_lookup_;
};

/// D_k(t) with rows and columns in the given order. Every label must be a
/// k-subset of the vertices; labels must be distinct.
LabeledMatrix build_dk(const Tree& t, int k, std::span<const VertexSet> order);
/// D_k(t) in lexicographic order.
LabeledMatrix build_dk(const Tree& t, int k);

/// {0,1},...,{0,n},{1,n},...,{n-1,n}: the 2n-1 index pairs of a bare path.
std::vector<VertexSet> path_x(int n);
/// path_x(n) followed by {0,l} for every leaf label l in increasing order.
std::vector<VertexSet> canonical_x(const CaterpillarSpec& spec);
/// The 2-subsets of {0..N-1} not in x, lexicographically ordered.
std::vector<VertexSet> complement_pairs(int num_vertices, std::span<const VertexSet> x);
/// canonical_x(spec) followed by its complement.
std::vector<VertexSet> canonical_first_order(const CaterpillarSpec& spec);

LabeledMatrix submatrix(const LabeledMatrix& m, std::span<const VertexSet> rows,
                        std::span<const VertexSet> cols);

enum class ExportFormat { kCsv, kJson };

/// csv: header "X,<col labels>", then "<row label>,<entries>" per row.
/// json: {"labels": [[...], ...], "entries": [["p/q", ...], ...]}, with
/// "row_labels"/"col_labels" in place of "labels" when they differ.
std::string export_labeled(const LabeledMatrix& m, ExportFormat format);
LabeledMatrix import_labeled(std::string_view text, ExportFormat format);

}  // namespace steinermat
