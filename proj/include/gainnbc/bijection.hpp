#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gainnbc/gain_graph.hpp"
#include "gainnbc/nbc.hpp"

namespace gainnbc {

/// Weight bounds of an (alpha,beta)-rooted labelled tree. Both may be 0.
struct ABParams {
  long long alpha = 0;
  long long beta = 0;

  /// alpha = 1-a, beta = b.
  static ABParams from_gain_bounds(Gain a, Gain b) { return {1 - a, b}; }
  friend bool operator==(const ABParams&, const ABParams&) = default;
};

struct ABEdge {
  Vertex parent = 0;
  Vertex child = 0;
  long long weight = 0;
  friend auto operator<=>(const ABEdge&, const ABEdge&) = default;
};

/// Rooted labelled tree with weighted parent->child edges, kept sorted by child.
/// An edge takes a weight in [1,alpha] when parent < child and [1,beta] when parent > child.
struct ABTree {
  Vertex root = 0;
  std::vector<ABEdge> edges;

  std::vector<Vertex> support() const;
  friend auto operator<=>(const ABTree&, const ABTree&) = default;
  friend bool operator==(const ABTree&, const ABTree&) = default;
};

/// ABTrees whose supports partition [n], ordered by smallest support vertex.
struct ABForest {
  std::vector<ABTree> trees;
  friend auto operator<=>(const ABForest&, const ABForest&) = default;
  friend bool operator==(const ABForest&, const ABForest&) = default;
};

struct ABValidation {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

/// Checks rootedness and every weight interval; lists each violation.
ABValidation validate_ab_tree(const ABTree& tree, const ABParams& params);

/// NBC tree of K_n^{ab} (a+b in {0,1}) to its (1-a,b)-tree: the corner becomes the root and
/// an edge of canonical gain g gets weight g if g > 0, 1-g otherwise.
ABTree encode_tree(const NbcTree& tree, Gain a, Gain b);
/// Inverse of encode_tree. The result lives in K_n^{ab}; n = 0 takes the largest label.
/// Throws on weight-interval violations.
NbcTree decode_tree(const ABTree& tree, Gain a, Gain b, int n = 0);

ABForest encode_forest(const NbcForest& forest, Gain a, Gain b);
NbcForest decode_forest(const ABForest& forest, int n, Gain a, Gain b);

/// Plain rooted labelled tree as (parent, child) pairs sorted by child.
struct RootedTree {
  Vertex root = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  friend auto operator<=>(const RootedTree&, const RootedTree&) = default;
  friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

/// Braid forests (a=b=0) to increasing trees on {0,...,n} rooted at 0.
RootedTree braid_correspondence(const NbcForest& forest, Gain a, Gain b);
/// Shi forests (a=0, b=1) to labelled trees on [n+1] rooted at n+1.
RootedTree shi_correspondence(const NbcForest& forest, Gain a, Gain b);

/// Every (alpha,beta)-tree whose support is exactly `support`.
std::vector<ABTree> enumerate_ab_trees(const std::vector<Vertex>& support, const ABParams& params);
/// Every (alpha,beta)-forest on [n].
std::vector<ABForest> enumerate_ab_forests(int n, const ABParams& params);

/// Every rooted tree on `labels` rooted at `root` (Cayley enumeration by parent maps).
std::vector<RootedTree> enumerate_rooted_trees(const std::vector<Vertex>& labels, Vertex root);

}  // namespace gainnbc
