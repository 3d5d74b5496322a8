#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "steinermat/tree.hpp"

namespace steinermat {

/// Nonempty sorted set of vertex labels. Duplicates are dropped on
/// construction.
class VertexSet {
 public:
  explicit VertexSet(std::vector<int> labels);
  VertexSet(std::initializer_list<int> labels) : VertexSet(std::vector<int>(labels)) {}

  std::span<const int> labels() const noexcept { return labels_; }
  int size() const noexcept { return static_cast<int>(labels_.size()); }
  int front() const { return labels_.front(); }
  int back() const { return labels_.back(); }
  bool contains(int v) const;

  VertexSet united(const VertexSet& other) const;

  /// Labels joined by '|', e.g. "0|5".
  std::string to_string() const;
  /// Inverse of to_string. Throws std::invalid_argument on malformed text.
  static VertexSet parse(std::string_view text);

  auto operator<=>(const VertexSet&) const = default;
  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<int> labels_;
};

/// Edge count of the minimal subtree spanning X, by repeatedly pruning
/// pendant vertices outside X. A singleton has distance 0.
int steiner_distance(const Tree& t, const VertexSet& x);

/// Independent check of steiner_distance: counts the edges whose removal
/// leaves members of X on both sides.
int steiner_distance_separation_oracle(const Tree& t, const VertexSet& x);

/// Edges of the minimal subtree spanning X, sorted.
std::vector<Edge> steiner_tree_edges(const Tree& t, const VertexSet& x);

}  // namespace steinermat
