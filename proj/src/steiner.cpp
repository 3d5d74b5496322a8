#include "steinermat/steiner.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace steinermat {

VertexSet::VertexSet(std::vector<int> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("vertex set must be nonempty");
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  if (labels_.front() < 0) throw std::invalid_argument("negative vertex label");
}

bool VertexSet::contains(int v) const {
  return std::binary_search(labels_.begin(), labels_.end(), v);
}

VertexSet VertexSet::united(const VertexSet& other) const {
  std::vector<int> merged;
  merged.reserve(labels_.size() + other.labels_.size());
  std::set_union(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
                 std::back_inserter(merged));
  return VertexSet(std::move(merged));
}

std::string VertexSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += '|';
    out += std::to_string(labels_[i]);
  }
  return out;
}

VertexSet VertexSet::parse(std::string_view text) {
  std::vector<int> labels;
  std::size_t pos = 0;
  while (true) {
    std::size_t bar = text.find('|', pos);
    std::string_view token = text.substr(pos, bar == std::string_view::npos ? text.npos : bar - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed vertex set label '" + std::string(text) + "'");
    }
    labels.push_back(value);
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  return VertexSet(std::move(labels));
}

namespace {

void check_labels(const Tree& t, const VertexSet& x) {
  if (x.back() >= t.num_vertices()) {
    throw std::out_of_range("vertex label " + std::to_string(x.back()) + " out of range");
  }
}

// Marks the vertices that survive pruning; returns the survivor count.
int prune(const Tree& t, const VertexSet& x, std::vector<char>& alive) {
  const int num = t.num_vertices();
  std::vector<int> degree(num);
  std::vector<char> terminal(num, 0);
  for (int v : x.labels()) terminal[v] = 1;
  std::vector<int> queue;
  queue.reserve(num);
  for (int v = 0; v < num; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1 && !terminal[v]) queue.push_back(v);
  }
  alive.assign(num, 1);
  int survivors = num;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    alive[v] = 0;
    --survivors;
    for (int w : t.neighbors(v)) {
      if (alive[w] && --degree[w] == 1 && !terminal[w]) queue.push_back(w);
    }
  }
  return survivors;
}

}  // namespace

int steiner_distance(const Tree& t, const VertexSet& x) {
  check_labels(t, x);
  std::vector<char> alive;
  return prune(t, x, alive) - 1;
}

int steiner_distance_separation_oracle(const Tree& t, const VertexSet& x) {
  check_labels(t, x);
  const int num = t.num_vertices();
  // Root at 0; count members of X in each subtree.
  std::vector<int> parent(num, -1);
  std::vector<int> order{0};
  order.reserve(num);
  std::vector<char> seen(num, 0);
  seen[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (int w : t.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        order.push_back(w);
      }
    }
  }
  std::vector<int> below(num, 0);
  for (int v : x.labels()) below[v] = 1;
  int crossing = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (parent[v] < 0) continue;
    if (below[v] > 0 && below[v] < x.size()) ++crossing;
    below[parent[v]] += below[v];
  }
  return crossing;
}

std::vector<Edge> steiner_tree_edges(const Tree& t, const VertexSet& x) {
  check_labels(t, x);
  std::vector<char> alive;
  prune(t, x, alive);
  std::vector<Edge> out;
  for (const Edge& e : t.edges()) {
    if (alive[e.u] && alive[e.v]) out.push_back(e);
  }
  return out;
}

}  // namespace steinermat
