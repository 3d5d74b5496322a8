#include "steinermat/tree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace steinermat {

Tree Tree::from_edges(int num_vertices, std::span<const Edge> edges) {
  if (num_vertices < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (static_cast<int>(edges.size()) != num_vertices - 1) {
    throw std::invalid_argument("tree on " + std::to_string(num_vertices) + " vertices needs " +
                                std::to_string(num_vertices - 1) + " edges, got " +
                                std::to_string(edges.size()));
  }
  std::vector<std::vector<int>> adjacency(num_vertices);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices) {
      throw std::invalid_argument("edge label out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw std::invalid_argument("duplicate edge");
    }
  }
  // N-1 edges plus connectivity implies acyclic.
  std::vector<bool> seen(num_vertices, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != num_vertices) throw std::invalid_argument("graph is disconnected");
  return Tree(std::move(adjacency));
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (int v = 0; v < num_vertices(); ++v) {
    for (int w : adjacency_[v]) {
      if (v < w) out.push_back({v, w});
    }
  }
  return out;
}

CaterpillarSpec::CaterpillarSpec(int n, std::vector<int> leaf_counts)
    : n_(n), leaf_counts_(std::move(leaf_counts)), total_leaves_(0) {
  if (n_ < 2) throw std::invalid_argument("caterpillar spine length must be at least 2");
  if (static_cast<int>(leaf_counts_.size()) != n_ - 1) {
    throw std::invalid_argument("caterpillar with spine length " + std::to_string(n_) + " needs " +
                                std::to_string(n_ - 1) + " leaf counts, got " +
                                std::to_string(leaf_counts_.size()));
  }
  for (int c : leaf_counts_) {
    if (c < 0) throw std::invalid_argument("negative leaf count");
    total_leaves_ += c;
  }
}

int CaterpillarSpec::first_leaf_of(int m) const {
  if (m < 1 || m > n_ - 1) throw std::out_of_range("not a spine-internal vertex");
  int label = n_ + 1;
  for (int j = 1; j < m; ++j) label += leaf_counts_[j - 1];
  return label;
}

int CaterpillarSpec::attachment(int label) const {
  if (label <= n_ || label >= num_vertices()) throw std::out_of_range("not a leaf label");
  int last = n_;
  for (int m = 1; m <= n_ - 1; ++m) {
    last += leaf_counts_[m - 1];
    if (label <= last) return m;
  }
  throw std::logic_error("unreachable: leaf label exceeds total");
}

std::string CaterpillarSpec::to_string() const {
  std::ostringstream os;
  os << "n=" << n_ << " leaves=";
  for (std::size_t j = 0; j < leaf_counts_.size(); ++j) os << (j ? "," : "") << leaf_counts_[j];
  return os.str();
}

Tree make_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs spine length n >= 1");
  std::vector<Edge> edges;
  for (int j = 0; j < n; ++j) edges.push_back({j, j + 1});
  return Tree::from_edges(n + 1, edges);
}

Tree make_caterpillar(const CaterpillarSpec& spec) {
  const int n = spec.n();
  std::vector<Edge> edges;
  for (int j = 0; j < n; ++j) edges.push_back({j, j + 1});
  int label = n;
  for (int m = 1; m <= n - 1; ++m) {
    for (int c = 0; c < spec.leaves_at(m); ++c) edges.push_back({m, ++label});
  }
  return Tree::from_edges(spec.num_vertices(), edges);
}

bool is_caterpillar(const Tree& t) {
  for (int v = 0; v < t.num_vertices(); ++v) {
    if (t.degree(v) < 2) continue;
    int internal_nbrs = 0;
    for (int w : t.neighbors(v)) internal_nbrs += t.degree(w) >= 2;
    if (internal_nbrs > 2) return false;
  }
  return true;
}

std::optional<CaterpillarRecognition> caterpillar_spec_of(const Tree& t) {
  const int num = t.num_vertices();
  if (num <= 2 || !is_caterpillar(t)) return std::nullopt;

  auto internal = [&](int v) { return t.degree(v) >= 2; };
  auto pendant_nbrs = [&](int v) {
    std::vector<int> out;
    for (int w : t.neighbors(v)) {
      if (!internal(w)) out.push_back(w);
    }
    return out;  // sorted
  };

  // Internal vertices induce a path; walk it from one end.
  int start = -1;
  for (int v = 0; v < num && start < 0; ++v) {
    if (!internal(v)) continue;
    int internal_nbrs = 0;
    for (int w : t.neighbors(v)) internal_nbrs += internal(w);
    if (internal_nbrs <= 1) start = v;
  }
  std::vector<int> spine_internal{start};
  for (int prev = -1, cur = start;;) {
    int next = -1;
    for (int w : t.neighbors(cur)) {
      if (internal(w) && w != prev) next = w;
    }
    if (next < 0) break;
    spine_internal.push_back(next);
    prev = cur;
    cur = next;
  }

  // Endpoints: the smallest candidate leaf anchors one end, the smallest
  // remaining leaf at the other end closes the spine.
  std::vector<int> head_leaves = pendant_nbrs(spine_internal.front());
  std::vector<int> tail_leaves = pendant_nbrs(spine_internal.back());
  int head_end = 0;
  int tail_end = 0;
  if (spine_internal.size() == 1) {
    head_end = head_leaves[0];
    tail_end = head_leaves[1];
  } else {
    if (tail_leaves.front() < head_leaves.front()) {
      std::reverse(spine_internal.begin(), spine_internal.end());
      std::swap(head_leaves, tail_leaves);
    }
    head_end = head_leaves.front();
    tail_end = tail_leaves.front();
  }

  std::vector<int> counts;
  for (int v : spine_internal) counts.push_back(t.degree(v) - 2);
  std::vector<int> reversed(counts.rbegin(), counts.rend());
  if (reversed < counts) {
    std::reverse(spine_internal.begin(), spine_internal.end());
    std::swap(head_end, tail_end);
    counts = reversed;
  }

  const int n = static_cast<int>(spine_internal.size()) + 1;
  std::vector<int> to_canonical(num, -1);
  to_canonical[head_end] = 0;
  to_canonical[tail_end] = n;
  for (int m = 1; m <= n - 1; ++m) to_canonical[spine_internal[m - 1]] = m;
  int label = n;
  for (int m = 1; m <= n - 1; ++m) {
    for (int leaf : pendant_nbrs(spine_internal[m - 1])) {
      if (leaf == head_end || leaf == tail_end) continue;
      to_canonical[leaf] = ++label;
    }
  }
  return CaterpillarRecognition{CaterpillarSpec(n, std::move(counts)), std::move(to_canonical)};
}

std::optional<CaterpillarSpec> as_labeled_caterpillar(const Tree& t) {
  int internal = 0;
  for (int v = 0; v < t.num_vertices(); ++v) internal += t.degree(v) >= 2;
  const int n = internal + 1;
  if (n < 2 || n >= t.num_vertices()) return std::nullopt;
  std::vector<int> counts;
  for (int m = 1; m <= n - 1; ++m) counts.push_back(t.degree(m) - 2);
  if (std::any_of(counts.begin(), counts.end(), [](int c) { return c < 0; })) return std::nullopt;
  CaterpillarSpec spec(n, std::move(counts));
  if (spec.num_vertices() != t.num_vertices() || make_caterpillar(spec) != t) return std::nullopt;
  return spec;
}

Tree relabel(const Tree& t, std::span<const int> mapping) {
  if (static_cast<int>(mapping.size()) != t.num_vertices()) {
    throw std::invalid_argument("relabel mapping has wrong size");
  }
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) {
    int a = mapping[e.u];
    int b = mapping[e.v];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Tree::from_edges(t.num_vertices(), edges);
}

int pendant_count(const Tree& t) {
  int count = 0;
  for (int v = 0; v < t.num_vertices(); ++v) count += t.degree(v) == 1;
  return count;
}

namespace {

std::vector<int> bfs_distances(const Tree& t, int source) {
  std::vector<int> dist(t.num_vertices(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : t.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

void check_label(const Tree& t, int v) {
  if (v < 0 || v >= t.num_vertices()) {
    throw std::out_of_range("vertex label " + std::to_string(v) + " out of range");
  }
}

}  // namespace

int tree_distance(const Tree& t, int u, int v) {
  check_label(t, u);
  check_label(t, v);
  return bfs_distances(t, u)[v];
}

std::vector<int> all_pairs_distances(const Tree& t) {
  const int num = t.num_vertices();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(num) * num);
  for (int v = 0; v < num; ++v) {
    auto row = bfs_distances(t, v);
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace steinermat
