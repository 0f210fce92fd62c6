#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gainnbc {

using Vertex = int;
using Gain = std::int64_t;

/// An edge `gain(lo,hi)` standing for the hyperplane x_hi - x_lo = gain.
/// Always stored with lo < hi; the reversed view (-gain)(hi,lo) is computed on demand.
struct GainedEdge {
  Vertex lo = 0;
  Vertex hi = 0;
  Gain gain = 0;

  /// Canonicalizes an edge read in the direction `from -> to`.
  static GainedEdge oriented(Vertex from, Vertex to, Gain gain);

  Vertex other(Vertex v) const { return v == lo ? hi : lo; }
  bool touches(Vertex v) const { return v == lo || v == hi; }
  /// Gain seen when the edge is traversed starting at `from`.
  Gain gain_from(Vertex from) const { return from == lo ? gain : -gain; }

  friend auto operator<=>(const GainedEdge&, const GainedEdge&) = default;
};

/// `g(i,j)` notation, e.g. "-1(2,3)".
std::string to_string(const GainedEdge& e);
/// Parses `g(i,j)`; either orientation is accepted and canonicalized.
GainedEdge parse_edge(std::string_view text);

struct ExpansionParams {
  int n = 1;
  Gain a = 0;
  Gain b = 0;

  /// braid (0,0), linial (1,1), shi (0,1), catalan (-1,1).
  static ExpansionParams preset(std::string_view name, int n);
  void validate() const;
  bool bijective() const { return a + b == 0 || a + b == 1; }
};

/// Integral gain graph on vertices 1..n. Edges are kept sorted by (lo, hi, gain).
class GainGraph {
 public:
  GainGraph() = default;
  GainGraph(int n, std::vector<GainedEdge> edges);

  int vertex_count() const { return n_; }
  std::span<const GainedEdge> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  const GainedEdge& edge(std::size_t i) const { return edges_[i]; }

  std::optional<std::size_t> index_of(const GainedEdge& e) const;
  bool contains(const GainedEdge& e) const { return index_of(e).has_value(); }
  /// Whether the edge gain(u,v), read from u to v, is present.
  bool has_edge(Vertex u, Vertex v, Gain gain) const;
  /// Largest |gain| over all edges; 0 for an edgeless graph.
  Gain max_abs_gain() const;

  friend bool operator==(const GainGraph&, const GainGraph&) = default;

 private:
  int n_ = 0;
  std::vector<GainedEdge> edges_;
};

/// K_n^{ab}: every pair i<j carries every gain in [a,b].
GainGraph build_expansion(const ExpansionParams& params);

/// Signed gain sum of a circle walked from `start` along `circle` in order.
/// Throws unless the sequence is a circle of `graph` (distinct edges, distinct vertices, closed).
Gain circle_gain(std::span<const GainedEdge> circle, Vertex start, const GainGraph& graph);

inline bool is_balanced_circle(std::span<const GainedEdge> circle, Vertex start,
                               const GainGraph& graph) {
  return circle_gain(circle, start, graph) == 0;
}

}  // namespace gainnbc
