#include "gainnbc/gain_graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>

#include "gainnbc/error.hpp"

namespace gainnbc {

GainedEdge GainedEdge::oriented(Vertex from, Vertex to, Gain gain) {
  require(from != to, "loops are not allowed");
  if (from < to) return {from, to, gain};
  return {to, from, -gain};
}

std::string to_string(const GainedEdge& e) {
  return std::to_string(e.gain) + "(" + std::to_string(e.lo) + "," + std::to_string(e.hi) + ")";
}

namespace {

template <typename T>
T parse_int(std::string_view s, std::string_view whole) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    fail(ErrorKind::kParse, "malformed edge '" + std::string(whole) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

GainedEdge parse_edge(std::string_view text) {
  std::string_view t = trim(text);
  auto open = t.find('(');
  auto comma = t.find(',');
  auto close = t.find(')');
  if (open == std::string_view::npos || comma == std::string_view::npos ||
      close != t.size() - 1 || !(open < comma && comma < close)) {
    fail(ErrorKind::kParse, "malformed edge '" + std::string(text) + "'");
  }
  auto gain = parse_int<Gain>(trim(t.substr(0, open)), text);
  auto i = parse_int<Vertex>(trim(t.substr(open + 1, comma - open - 1)), text);
  auto j = parse_int<Vertex>(trim(t.substr(comma + 1, close - comma - 1)), text);
  if (i == j) fail(ErrorKind::kParse, "loop edge '" + std::string(text) + "'");
  return GainedEdge::oriented(i, j, gain);
}

ExpansionParams ExpansionParams::preset(std::string_view name, int n) {
  if (name == "braid") return {n, 0, 0};
  if (name == "linial") return {n, 1, 1};
  if (name == "shi") return {n, 0, 1};
  if (name == "catalan") return {n, -1, 1};
  fail(ErrorKind::kInvalidArgument, "unknown preset '" + std::string(name) + "'");
}

void ExpansionParams::validate() const {
  require(n >= 1, "n must be at least 1");
  require(a <= b, "gain bounds require a <= b");
}

GainGraph::GainGraph(int n, std::vector<GainedEdge> edges) : n_(n), edges_(std::move(edges)) {
  require(n >= 1, "a gain graph needs at least one vertex");
  for (const auto& e : edges_) {
    require(e.lo < e.hi, "edge " + to_string(e) + " is not in canonical lo<hi form");
    require(e.lo >= 1 && e.hi <= n, "edge " + to_string(e) + " leaves the vertex set");
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  require(dup == edges_.end(), "duplicate edge " + (dup == edges_.end() ? "" : to_string(*dup)));
}

std::optional<std::size_t> GainGraph::index_of(const GainedEdge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool GainGraph::has_edge(Vertex u, Vertex v, Gain gain) const {
  if (u == v) return false;
  return contains(GainedEdge::oriented(u, v, gain));
}

Gain GainGraph::max_abs_gain() const {
  Gain m = 0;
  for (const auto& e : edges_) m = std::max(m, e.gain < 0 ? -e.gain : e.gain);
  return m;
}

GainGraph build_expansion(const ExpansionParams& params) {
  params.validate();
  std::vector<GainedEdge> edges;
  for (Vertex i = 1; i <= params.n; ++i)
    for (Vertex j = i + 1; j <= params.n; ++j)
      for (Gain g = params.a; g <= params.b; ++g) edges.push_back({i, j, g});
  return GainGraph(params.n, std::move(edges));
}

Gain circle_gain(std::span<const GainedEdge> circle, Vertex start, const GainGraph& graph) {
  require(circle.size() >= 2, "a circle has at least two edges");
  std::set<GainedEdge> seen_edges;
  std::set<Vertex> seen_vertices;
  Vertex cur = start;
  Gain total = 0;
  for (const auto& e : circle) {
    require(graph.contains(e), "edge " + to_string(e) + " is not in the graph");
    require(seen_edges.insert(e).second, "circle repeats edge " + to_string(e));
    require(e.touches(cur), "edge " + to_string(e) + " does not continue the walk");
    require(seen_vertices.insert(cur).second, "circle revisits a vertex");
    total += e.gain_from(cur);
    cur = e.other(cur);
  }
  require(cur == start, "edge sequence does not close up");
  return total;
}

}  // namespace gainnbc
