#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gainnbc/gain_graph.hpp"

namespace gainnbc {

using Height = std::int64_t;

/// A height function on a vertex subset of [n]: natural values with 0 attained.
class HeightFunction {
 public:
  HeightFunction() = default;
  /// `values[v-1]` is the height of v, or nullopt if v lies outside the support.
  explicit HeightFunction(std::span<const std::optional<Height>> values);
  /// Height function defined on all of [n].
  static HeightFunction on_all(std::span<const Height> values);

  int n() const { return static_cast<int>(values_.size()); }
  bool defined_at(Vertex v) const { return v >= 1 && v <= n() && values_[v - 1] >= 0; }
  Height at(Vertex v) const;
  std::vector<Vertex> support() const;
  std::size_t support_size() const;
  /// Smallest vertex among those of greatest height.
  Vertex corner() const;
  Height max_height() const;

  /// Restriction to `support` (a subset of this support), shifted so the minimum is 0.
  HeightFunction restricted(std::span<const Vertex> support) const;
  /// Array of n entries (index v-1), nullopt outside the support.
  std::vector<std::optional<Height>> values() const;

  friend bool operator==(const HeightFunction&, const HeightFunction&) = default;
  friend auto operator<=>(const HeightFunction&, const HeightFunction&) = default;

 private:
  std::vector<Height> values_;  // -1 outside support
};

inline bool is_coherent(const GainedEdge& e, const HeightFunction& h) {
  return h.defined_at(e.lo) && h.defined_at(e.hi) && h.at(e.hi) - h.at(e.lo) == e.gain;
}

/// The unique normalized height function of a tree (h(hi) - h(lo) = gain on each edge).
/// The support is the set of endpoints; throws on non-trees and empty edge sets.
HeightFunction height_of_balanced_tree(std::span<const GainedEdge> tree, const GainGraph& graph);

/// Phi[h]: the edges of `graph` with both ends in h's support that are coherent with h.
GainGraph coherent_subgraph(const GainGraph& graph, const HeightFunction& h);

/// O_h on vertices: higher first, ties broken by label.
std::strong_ordering compare_vertices(const HeightFunction& h, Vertex u, Vertex v);
/// O_h on edges: lexicographic over the endpoints sorted by O_h.
std::strong_ordering compare_edges(const HeightFunction& h, const GainedEdge& e1,
                                   const GainedEdge& e2);

/// Every height function on `support` (min 0, span at most (|support|-1) * max|gain|)
/// whose coherent subgraph restricted to `support` is connected. Lexicographic order.
std::vector<HeightFunction> enumerate_height_functions(const GainGraph& graph,
                                                       std::span<const Vertex> support);

}  // namespace gainnbc
