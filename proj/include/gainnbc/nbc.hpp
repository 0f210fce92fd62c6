#pragma once

#include <span>
#include <vector>

#include "gainnbc/bigint.hpp"
#include "gainnbc/gain_graph.hpp"
#include "gainnbc/height.hpp"

namespace gainnbc {

/// A balanced subtree of a gain graph containing no broken circuit of the selected
/// graph Phi[h] under O_h, where h is the tree's own height function.
class NbcTree {
 public:
  /// Certifies `edges` as an NBC tree of `graph`. A single-vertex tree is given by an
  /// empty edge list and `singleton`.
  static NbcTree certify(const GainGraph& graph, std::vector<GainedEdge> edges,
                         Vertex singleton = 0);

  std::span<const GainedEdge> edges() const { return edges_; }
  const HeightFunction& height() const { return height_; }
  Vertex corner() const { return height_.corner(); }
  std::vector<Vertex> support() const { return height_.support(); }

  friend bool operator==(const NbcTree&, const NbcTree&) = default;
  friend auto operator<=>(const NbcTree& x, const NbcTree& y) {
    if (auto c = x.height_ <=> y.height_; c != 0) return c;
    return x.edges_ <=> y.edges_;
  }

 private:
  friend class NbcEnumerator;
  NbcTree(std::vector<GainedEdge> edges, HeightFunction height)
      : edges_(std::move(edges)), height_(std::move(height)) {}

  std::vector<GainedEdge> edges_;  // sorted
  HeightFunction height_;
};

/// NBC trees whose supports partition [n], ordered by smallest support vertex.
struct NbcForest {
  int n = 0;
  std::vector<NbcTree> components;

  std::size_t edge_count() const;
  friend bool operator==(const NbcForest&, const NbcForest&) = default;
};

/// counts[j] = number of NBC forests with j edges, j = 0..n-1.
struct EdgeCountProfile {
  int n = 0;
  std::vector<BigInt> counts;

  BigInt total() const;
  friend bool operator==(const EdgeCountProfile&, const EdgeCountProfile&) = default;
};

/// Corner test: the tree with height h is NBC in Phi[h] iff, recursively, each piece left
/// after deleting the corner c hangs from its O_h-smallest vertex adjacent to c in Phi[h].
bool satisfies_corner_condition(const GainGraph& graph, std::span<const GainedEdge> tree,
                                const HeightFunction& h);

/// All NBC spanning trees of Phi[h] restricted to h's support, built by the corner
/// recursion. Throws if Phi[h] is not connected on the support.
std::vector<NbcTree> enumerate_nbc_trees(const GainGraph& graph, const HeightFunction& h);
/// Same count without materializing the trees.
BigInt count_nbc_trees(const GainGraph& graph, const HeightFunction& h);

/// All NBC spanning forests, via the decomposition over set partitions of [n] and
/// coherent height functions on each block.
std::vector<NbcForest> enumerate_nbc_sets(const GainGraph& graph);
/// All NBC trees spanning [n], summed over coherent height functions.
std::vector<NbcTree> enumerate_spanning_nbc_trees(const GainGraph& graph);

EdgeCountProfile nbc_edge_profile(const GainGraph& graph);

}  // namespace gainnbc
