#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace steinermat {

struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Labeled free tree on vertices 0..num_vertices()-1.
///
/// Construction validates the tree property (N-1 edges, connected, no
/// self-loops, no duplicate edges). Instances are immutable.
class Tree {
 public:
  /// Throws std::invalid_argument if the edges do not form a tree.
  static Tree from_edges(int num_vertices, std::span<const Edge> edges);

  int num_vertices() const noexcept { return static_cast<int>(adjacency_.size()); }
  int num_edges() const noexcept { return num_vertices() - 1; }

  /// Sorted neighbor labels of v.
  std::span<const int> neighbors(int v) const { return adjacency_.at(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Tree&) const = default;

 private:
  explicit Tree(std::vector<std::vector<int>> adjacency)
      : adjacency_(std::move(adjacency)) {}

  std::vector<std::vector<int>> adjacency_;
};

/// Spine length n plus the leaf counts i_1..i_{n-1} of the spine-internal
/// vertices. Leaves on the spine endpoints 0 and n do not exist.
class CaterpillarSpec {
 public:
  /// Throws std::invalid_argument unless n >= 2, leaf_counts.size() == n-1
  /// and every count is nonnegative.
  CaterpillarSpec(int n, std::vector<int> leaf_counts);

  int n() const noexcept { return n_; }
  std::span<const int> leaf_counts() const noexcept { return leaf_counts_; }
  /// i_m for spine-internal vertex m in 1..n-1.
  int leaves_at(int m) const { return leaf_counts_.at(m - 1); }

  int total_leaves() const noexcept { return total_leaves_; }
  /// N = n + 1 + sum of leaf counts.
  int num_vertices() const noexcept { return n_ + 1 + total_leaves_; }
  /// Pendant vertices: every attached leaf plus the two spine endpoints.
  int pendant_count() const noexcept { return total_leaves_ + 2; }

  /// Spine vertex that leaf `label` (> n) is attached to.
  int attachment(int label) const;
  /// First leaf label attached to spine vertex m (labels run consecutively).
  int first_leaf_of(int m) const;

  std::string to_string() const;

  bool operator==(const CaterpillarSpec&) const = default;

 private:
  int n_;
  std::vector<int> leaf_counts_;
  int total_leaves_;
};

Tree make_path(int n);
Tree make_caterpillar(const CaterpillarSpec& spec);

struct CaterpillarRecognition {
  CaterpillarSpec spec;
  /// to_canonical[original label] = label in make_caterpillar(spec).
  std::vector<int> to_canonical;
};

/// True when the non-pendant vertices of t induce a path (possibly empty).
/// Every tree on at most 3 vertices qualifies.
bool is_caterpillar(const Tree& t);

/// Canonical spec of a caterpillar plus the relabeling onto
/// make_caterpillar(spec). Returns nullopt for non-caterpillars and for trees
/// whose longest path has fewer than two edges (no spec with n >= 2 exists).
std::optional<CaterpillarRecognition> caterpillar_spec_of(const Tree& t);

/// The spec for which t == make_caterpillar(spec) holds verbatim, if any.
std::optional<CaterpillarSpec> as_labeled_caterpillar(const Tree& t);

/// Applies a permutation of labels: vertex v becomes mapping[v].
Tree relabel(const Tree& t, std::span<const int> mapping);

int pendant_count(const Tree& t);

/// Number of edges on the unique u-v path.
int tree_distance(const Tree& t, int u, int v);

/// All pairwise distances, row-major N x N.
std::vector<int> all_pairs_distances(const Tree& t);

/// Decodes a Pruefer sequence (values in 0..N-1, length N-2) into its tree.
Tree tree_from_prufer(int num_vertices, std::span<const int> sequence);

/// Labeled trees on N vertices in lexicographic order of their Pruefer
/// sequences, addressable by index.
class LabeledTreeEnumerator {
 public:
  static constexpr int kDefaultMaxVertices = 9;

  /// Throws std::invalid_argument unless 2 <= N <= max_vertices.
  explicit LabeledTreeEnumerator(int num_vertices, int max_vertices = kDefaultMaxVertices);

  int num_vertices() const noexcept { return num_vertices_; }
  /// N^(N-2).
  std::uint64_t size() const noexcept { return count_; }

  std::vector<int> prufer_at(std::uint64_t index) const;
  Tree tree_at(std::uint64_t index) const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t i = 0; i < count_; ++i) fn(i, tree_at(i));
  }

 private:
  int num_vertices_;
  std::uint64_t count_;
};

std::vector<Tree> enumerate_labeled_trees(int num_vertices,
                                          int max_vertices = LabeledTreeEnumerator::kDefaultMaxVertices);

/// Whitespace-separated "u v" pairs, one edge per line, '#' starts a comment.
/// Throws ParseError with a kind naming the defect.
Tree parse_edge_list(std::string_view text);
/// One "u v" line per edge, u < v, edges sorted.
std::string serialize_edge_list(const Tree& t);

}  // namespace steinermat
