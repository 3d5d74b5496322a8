#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "steinermat/error.hpp"
#include "steinermat/tree.hpp"

namespace steinermat {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kEmpty: return "empty input";
    case ParseErrorKind::kBadToken: return "bad token";
    case ParseErrorKind::kNonContiguousLabels: return "non-contiguous labels";
    case ParseErrorKind::kCycle: return "cycle";
    case ParseErrorKind::kDisconnected: return "disconnected";
  }
  return "unknown";
}

namespace {

int parse_label(std::string_view token, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
    throw ParseError(ParseErrorKind::kBadToken,
                     "line " + std::to_string(line_no) + ": '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

Tree parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::set<int> labels;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError(ParseErrorKind::kBadToken,
                       "line " + std::to_string(line_no) + ": expected two labels");
    }
    int u = parse_label(tokens[0], line_no);
    int v = parse_label(tokens[1], line_no);
    edges.push_back({u, v});
    labels.insert(u);
    labels.insert(v);
  }
  if (edges.empty()) throw ParseError(ParseErrorKind::kEmpty, "no edges");

  const int num = static_cast<int>(labels.size());
  if (*labels.rbegin() != num - 1) {
    throw ParseError(ParseErrorKind::kNonContiguousLabels,
                     "labels must be exactly 0.." + std::to_string(num - 1));
  }

  std::vector<int> parent(num);
  std::iota(parent.begin(), parent.end(), 0);
  int components = num;
  for (const Edge& e : edges) {
    int a = find_root(parent, e.u);
    int b = find_root(parent, e.v);
    if (a == b) {
      throw ParseError(ParseErrorKind::kCycle, "edge " + std::to_string(e.u) + " " +
                                                   std::to_string(e.v) + " closes a cycle");
    }
    parent[a] = b;
    --components;
  }
  if (components != 1) {
    throw ParseError(ParseErrorKind::kDisconnected,
                     std::to_string(components) + " connected components");
  }
  return Tree::from_edges(num, edges);
}

std::string serialize_edge_list(const Tree& t) {
  std::ostringstream os;
  for (const Edge& e : t.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

}  // namespace steinermat
