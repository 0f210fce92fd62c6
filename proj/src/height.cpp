#include "gainnbc/height.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

#include "gainnbc/error.hpp"
#include "mask.hpp"

namespace gainnbc {

HeightFunction::HeightFunction(std::span<const std::optional<Height>> values) {
  values_.reserve(values.size());
  bool has_zero = false;
  for (const auto& v : values) {
    if (v) {
      require(*v >= 0, "heights must be natural numbers");
      has_zero = has_zero || *v == 0;
    }
    values_.push_back(v ? *v : -1);
  }
  require(has_zero, "a height function must attain 0");
}

HeightFunction HeightFunction::on_all(std::span<const Height> values) {
  std::vector<std::optional<Height>> opt(values.begin(), values.end());
  return HeightFunction(opt);
}

Height HeightFunction::at(Vertex v) const {
  require(defined_at(v), "vertex " + std::to_string(v) + " is outside the height support");
  return values_[v - 1];
}

std::vector<Vertex> HeightFunction::support() const {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n(); ++v)
    if (values_[v - 1] >= 0) out.push_back(v);
  return out;
}

std::size_t HeightFunction::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](Height h) { return h >= 0; }));
}

Vertex HeightFunction::corner() const {
  require(!values_.empty(), "empty height function has no corner");
  Vertex best = 0;
  for (Vertex v = 1; v <= n(); ++v) {
    if (values_[v - 1] < 0) continue;
    if (best == 0 || values_[v - 1] > values_[best - 1]) best = v;
  }
  return best;
}

Height HeightFunction::max_height() const { return *std::max_element(values_.begin(), values_.end()); }

HeightFunction HeightFunction::restricted(std::span<const Vertex> support) const {
  require(!support.empty(), "restriction to an empty support");
  Height lo = std::numeric_limits<Height>::max();
  for (Vertex v : support) lo = std::min(lo, at(v));
  std::vector<std::optional<Height>> out(values_.size());
  for (Vertex v : support) out[v - 1] = at(v) - lo;
  return HeightFunction(out);
}

std::vector<std::optional<Height>> HeightFunction::values() const {
  std::vector<std::optional<Height>> out;
  out.reserve(values_.size());
  for (Height h : values_) out.push_back(h >= 0 ? std::optional<Height>(h) : std::nullopt);
  return out;
}

HeightFunction height_of_balanced_tree(std::span<const GainedEdge> tree, const GainGraph& graph) {
  require(!tree.empty(), "tree has an empty support");
  std::map<Vertex, std::vector<const GainedEdge*>> adj;
  for (const auto& e : tree) {
    require(graph.contains(e), "edge " + to_string(e) + " is not in the graph");
    adj[e.lo].push_back(&e);
    adj[e.hi].push_back(&e);
  }
  require(tree.size() + 1 == adj.size(), "edge set is not a tree");

  std::map<Vertex, Height> rel;
  std::queue<Vertex> todo;
  Vertex root = adj.begin()->first;
  rel[root] = 0;
  todo.push(root);
  while (!todo.empty()) {
    Vertex u = todo.front();
    todo.pop();
    for (const GainedEdge* e : adj[u]) {
      Vertex w = e->other(u);
      if (rel.contains(w)) continue;
      rel[w] = rel[u] + e->gain_from(u);
      todo.push(w);
    }
  }
  require(rel.size() == adj.size(), "edge set is not a tree");

  Height lo = std::numeric_limits<Height>::max();
  for (auto& [v, h] : rel) lo = std::min(lo, h);
  std::vector<std::optional<Height>> values(graph.vertex_count());
  for (auto& [v, h] : rel) values[v - 1] = h - lo;
  return HeightFunction(values);
}

GainGraph coherent_subgraph(const GainGraph& graph, const HeightFunction& h) {
  std::vector<GainedEdge> kept;
  for (const auto& e : graph.edges())
    if (is_coherent(e, h)) kept.push_back(e);
  return GainGraph(graph.vertex_count(), std::move(kept));
}

std::strong_ordering compare_vertices(const HeightFunction& h, Vertex u, Vertex v) {
  Height hu = h.at(u), hv = h.at(v);
  if (hu != hv) return hv <=> hu;
  return u <=> v;
}

namespace {

std::pair<Vertex, Vertex> sorted_ends(const HeightFunction& h, const GainedEdge& e) {
  if (compare_vertices(h, e.lo, e.hi) < 0) return {e.lo, e.hi};
  return {e.hi, e.lo};
}

}  // namespace

std::strong_ordering compare_edges(const HeightFunction& h, const GainedEdge& e1,
                                   const GainedEdge& e2) {
  auto [a1, b1] = sorted_ends(h, e1);
  auto [a2, b2] = sorted_ends(h, e2);
  if (auto c = compare_vertices(h, a1, a2); c != 0) return c;
  if (auto c = compare_vertices(h, b1, b2); c != 0) return c;
  // Coherent edges on the same pair coincide; the gain only matters off Phi[h].
  return e1.gain <=> e2.gain;
}

std::vector<HeightFunction> enumerate_height_functions(const GainGraph& graph,
                                                       std::span<const Vertex> support) {
  require(!support.empty(), "support must be nonempty");
  std::vector<Vertex> verts(support.begin(), support.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (Vertex v : verts) require(v >= 1 && v <= graph.vertex_count(), "support vertex out of range");
  detail::require_mask_range(static_cast<int>(verts.size()));

  const int k = static_cast<int>(verts.size());
  const Height bound = static_cast<Height>(k - 1) * graph.max_abs_gain();

  std::vector<HeightFunction> out;
  std::vector<Height> rel(k, 0);

  auto connected = [&] {
    std::vector<std::uint64_t> adj(k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (graph.has_edge(verts[i], verts[j], rel[j] - rel[i])) {
          adj[i] |= std::uint64_t{1} << j;
          adj[j] |= std::uint64_t{1} << i;
        }
    std::uint64_t reached = 1, frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      frontier = next & ~reached;
      reached |= next;
    }
    return std::popcount(reached) == k;
  };

  // verts[0] is pinned at relative height 0; the rest range so that max - min <= bound.
  auto place = [&](auto&& self, int idx, Height lo, Height hi) -> void {
    if (idx == k) {
      if (!connected()) return;
      std::vector<std::optional<Height>> values(graph.vertex_count());
      for (int i = 0; i < k; ++i) values[verts[i] - 1] = rel[i] - lo;
      out.emplace_back(values);
      return;
    }
    for (Height r = hi - bound; r <= lo + bound; ++r) {
      rel[idx] = r;
      self(self, idx + 1, std::min(lo, r), std::max(hi, r));
    }
  };
  place(place, 1, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gainnbc
