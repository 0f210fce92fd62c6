#include "gainnbc/nbc.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gainnbc/error.hpp"
#include "mask.hpp"

namespace gainnbc {

using detail::bit;
using detail::Mask;

std::size_t NbcForest::edge_count() const {
  std::size_t total = 0;
  for (const auto& t : components) total += t.edges().size();
  return total;
}

BigInt EdgeCountProfile::total() const {
  return std::accumulate(counts.begin(), counts.end(), BigInt{0});
}

namespace {

// Coherent adjacency of Phi[h] over h's support.
class SelectedGraph {
 public:
  SelectedGraph(const GainGraph& graph, const HeightFunction& h) : h_(h), adj_(h.n() + 1, 0) {
    detail::require_mask_range(h.n());
    require(h.n() == graph.vertex_count(), "height function and graph disagree on n");
    support_ = detail::mask_of(h.support());
    for (const auto& e : graph.edges()) {
      if (!is_coherent(e, h)) continue;
      adj_[e.lo] |= bit(e.hi);
      adj_[e.hi] |= bit(e.lo);
    }
  }

  Mask support() const { return support_; }
  Mask adjacent(Vertex v) const { return adj_[v]; }
  const HeightFunction& height() const { return h_; }

  // O_h-smallest vertex of a nonempty mask.
  Vertex first(Mask m) const {
    Vertex best = detail::lowest(m);
    for (m &= m - 1; m != 0; m &= m - 1) {
      Vertex v = detail::lowest(m);
      if (compare_vertices(h_, v, best) < 0) best = v;
    }
    return best;
  }

  bool connected(Mask m) const {
    if (m == 0) return false;
    Mask reached = bit(detail::lowest(m)), frontier = reached;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= adj_[detail::lowest(f)];
      next &= m;
      frontier = next & ~reached;
      reached |= next;
    }
    return reached == m;
  }

  GainedEdge edge_between(Vertex from, Vertex to) const {
    return GainedEdge::oriented(from, to, h_.at(to) - h_.at(from));
  }

 private:
  const HeightFunction& h_;
  std::vector<Mask> adj_;
  Mask support_ = 0;
};

// One way of hanging the pieces of block \ {corner} off the corner.
struct Attachment {
  Mask piece;
  GainedEdge edge;
};

// Calls f(attachments) for every partition of `rest` into Phi[h]-connected pieces that
// each touch `corner`, with each piece's attaching vertex fixed as its O_h-smallest
// neighbour of the corner.
template <typename F>
void for_each_attachment(const SelectedGraph& sel, Vertex corner, Mask rest, F&& f) {
  std::vector<Attachment> chosen;
  const Mask reach = sel.adjacent(corner);
  auto split = [&](auto&& self, Mask rem) -> void {
    if (rem == 0) {
      f(std::as_const(chosen));
      return;
    }
    const Mask anchor = rem & (~rem + 1);
    const Mask others = rem & ~anchor;
    auto try_piece = [&](Mask piece) {
      if ((piece & reach) == 0 || !sel.connected(piece)) return;
      Vertex v = sel.first(piece & reach);
      chosen.push_back({piece, sel.edge_between(corner, v)});
      self(self, rem & ~piece);
      chosen.pop_back();
    };
    try_piece(anchor);
    detail::for_each_submask(others, [&](Mask sub) { try_piece(anchor | sub); });
  };
  split(split, rest);
}

}  // namespace

// Corner recursion over a fixed height function; results memoized per vertex block.
class NbcEnumerator {
 public:
  NbcEnumerator(const GainGraph& graph, const HeightFunction& h) : sel_(graph, h) {}

  const std::vector<std::vector<GainedEdge>>& trees(Mask block) {
    if (auto it = trees_.find(block); it != trees_.end()) return it->second;
    std::vector<std::vector<GainedEdge>> out;
    if (detail::size(block) == 1) {
      out.emplace_back();
    } else {
      const Vertex c = sel_.first(block);
      for_each_attachment(sel_, c, block & ~bit(c), [&](const std::vector<Attachment>& parts) {
        std::vector<const std::vector<std::vector<GainedEdge>>*> lists;
        for (const auto& p : parts) {
          lists.push_back(&trees(p.piece));
          if (lists.back()->empty()) return;
        }
        std::vector<GainedEdge> acc;
        auto combine = [&](auto&& self, std::size_t i) -> void {
          if (i == parts.size()) {
            std::vector<GainedEdge> t = acc;
            std::sort(t.begin(), t.end());
            out.push_back(std::move(t));
            return;
          }
          for (const auto& sub : *lists[i]) {
            const std::size_t mark = acc.size();
            acc.insert(acc.end(), sub.begin(), sub.end());
            acc.push_back(parts[i].edge);
            self(self, i + 1);
            acc.resize(mark);
          }
        };
        combine(combine, 0);
      });
    }
    return trees_.emplace(block, std::move(out)).first->second;
  }

  const BigInt& count(Mask block) {
    if (auto it = counts_.find(block); it != counts_.end()) return it->second;
    BigInt total = 0;
    if (detail::size(block) == 1) {
      total = 1;
    } else {
      const Vertex c = sel_.first(block);
      for_each_attachment(sel_, c, block & ~bit(c), [&](const std::vector<Attachment>& parts) {
        BigInt prod = 1;
        for (const auto& p : parts) {
          prod *= count(p.piece);
          if (prod == 0) return;
        }
        total += prod;
      });
    }
    return counts_.emplace(block, std::move(total)).first->second;
  }

  std::vector<NbcTree> spanning_trees() {
    require_connected();
    std::vector<NbcTree> out;
    for (auto& edges : trees(sel_.support())) out.push_back(NbcTree(edges, sel_.height()));
    return out;
  }

  BigInt spanning_count() {
    require_connected();
    return count(sel_.support());
  }

 private:
  void require_connected() const {
    require(sel_.support() != 0 && sel_.connected(sel_.support()),
            "the selected graph is not connected on the height support");
  }

  SelectedGraph sel_;
  std::map<Mask, std::vector<std::vector<GainedEdge>>> trees_;
  std::map<Mask, BigInt> counts_;
};

bool satisfies_corner_condition(const GainGraph& graph, std::span<const GainedEdge> tree,
                                const HeightFunction& h) {
  SelectedGraph sel(graph, h);
  const Mask support = sel.support();
  Mask touched = 0;
  for (const auto& e : tree) {
    if (!graph.contains(e) || !is_coherent(e, h)) return false;
    touched |= bit(e.lo) | bit(e.hi);
  }
  if (tree.size() + 1 != static_cast<std::size_t>(detail::size(support))) return false;
  if (!tree.empty() && touched != support) return false;

  std::vector<Mask> tree_adj(h.n() + 1, 0);
  for (const auto& e : tree) {
    tree_adj[e.lo] |= bit(e.hi);
    tree_adj[e.hi] |= bit(e.lo);
  }
  auto component = [&](Vertex start, Mask within) {
    Mask reached = bit(start), frontier = reached;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= tree_adj[detail::lowest(f)];
      next &= within;
      frontier = next & ~reached;
      reached |= next;
    }
    return reached;
  };
  if (component(detail::lowest(support), support) != support) return false;

  auto check = [&](auto&& self, Mask block) -> bool {
    if (detail::size(block) == 1) return true;
    const Vertex c = sel.first(block);
    Mask rest = block & ~bit(c);
    while (rest != 0) {
      const Mask piece = component(detail::lowest(rest), rest);
      rest &= ~piece;
      const Mask hooks = tree_adj[c] & piece;
      if (detail::size(hooks) != 1) return false;
      if (detail::lowest(hooks) != sel.first(piece & sel.adjacent(c))) return false;
      if (!self(self, piece)) return false;
    }
    return true;
  };
  return check(check, support);
}

NbcTree NbcTree::certify(const GainGraph& graph, std::vector<GainedEdge> edges, Vertex singleton) {
  if (edges.empty()) {
    require(singleton >= 1 && singleton <= graph.vertex_count(),
            "a single-vertex tree needs a vertex in [n]");
    std::vector<std::optional<Height>> values(graph.vertex_count());
    values[singleton - 1] = 0;
    return NbcTree({}, HeightFunction(values));
  }
  HeightFunction h = height_of_balanced_tree(edges, graph);
  require(singleton == 0 || h.defined_at(singleton), "singleton vertex is not on the tree");
  std::sort(edges.begin(), edges.end());
  if (!satisfies_corner_condition(graph, edges, h)) {
    fail(ErrorKind::kInvalidArgument, "tree contains a broken circuit");
  }
  return NbcTree(std::move(edges), std::move(h));
}

std::vector<NbcTree> enumerate_nbc_trees(const GainGraph& graph, const HeightFunction& h) {
  return NbcEnumerator(graph, h).spanning_trees();
}

BigInt count_nbc_trees(const GainGraph& graph, const HeightFunction& h) {
  return NbcEnumerator(graph, h).spanning_count();
}

namespace {

class BlockTrees {
 public:
  explicit BlockTrees(const GainGraph& graph) : graph_(graph) {
    detail::require_mask_range(graph.vertex_count());
  }

  const std::vector<NbcTree>& trees(Mask block) {
    if (auto it = trees_.find(block); it != trees_.end()) return it->second;
    std::vector<NbcTree> out;
    for (const auto& h : enumerate_height_functions(graph_, detail::vertices(block))) {
      auto part = enumerate_nbc_trees(graph_, h);
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
    return trees_.emplace(block, std::move(out)).first->second;
  }

  const BigInt& count(Mask block) {
    if (auto it = counts_.find(block); it != counts_.end()) return it->second;
    BigInt total = 0;
    for (const auto& h : enumerate_height_functions(graph_, detail::vertices(block)))
      total += count_nbc_trees(graph_, h);
    return counts_.emplace(block, std::move(total)).first->second;
  }

 private:
  const GainGraph& graph_;
  std::map<Mask, std::vector<NbcTree>> trees_;
  std::map<Mask, BigInt> counts_;
};

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace

std::vector<NbcForest> enumerate_nbc_sets(const GainGraph& graph) {
  BlockTrees blocks(graph);
  const int n = graph.vertex_count();
  std::vector<NbcForest> out;
  std::vector<const NbcTree*> picked;

  // Blocks are chosen in order of their smallest vertex, so components come out sorted.
  auto split = [&](auto&& self, Mask rem) -> void {
    if (rem == 0) {
      NbcForest f{n, {}};
      for (const NbcTree* t : picked) f.components.push_back(*t);
      out.push_back(std::move(f));
      return;
    }
    const Mask anchor = rem & (~rem + 1);
    auto use = [&](Mask block) {
      for (const auto& t : blocks.trees(block)) {
        picked.push_back(&t);
        self(self, rem & ~block);
        picked.pop_back();
      }
    };
    use(anchor);
    detail::for_each_submask(rem & ~anchor, [&](Mask sub) { use(anchor | sub); });
  };
  split(split, full_mask(n));
  return out;
}

std::vector<NbcTree> enumerate_spanning_nbc_trees(const GainGraph& graph) {
  BlockTrees blocks(graph);
  return blocks.trees(full_mask(graph.vertex_count()));
}

EdgeCountProfile nbc_edge_profile(const GainGraph& graph) {
  BlockTrees blocks(graph);
  const int n = graph.vertex_count();
  std::map<Mask, std::vector<BigInt>> memo;

  // by_edges(rem)[j] = number of NBC forests on `rem` with j edges.
  auto by_edges = [&](auto&& self, Mask rem) -> const std::vector<BigInt>& {
    if (auto it = memo.find(rem); it != memo.end()) return it->second;
    std::vector<BigInt> acc(detail::size(rem) + 1, 0);
    if (rem == 0) {
      acc[0] = 1;
    } else {
      const Mask anchor = rem & (~rem + 1);
      auto use = [&](Mask block) {
        const BigInt& trees = blocks.count(block);
        if (trees == 0) return;
        const int shift = detail::size(block) - 1;
        const auto& tail = self(self, rem & ~block);
        for (std::size_t j = 0; j < tail.size(); ++j)
          if (tail[j] != 0) acc[j + shift] += trees * tail[j];
      };
      use(anchor);
      detail::for_each_submask(rem & ~anchor, [&](Mask sub) { use(anchor | sub); });
    }
    return memo.emplace(rem, std::move(acc)).first->second;
  };

  EdgeCountProfile profile{n, by_edges(by_edges, full_mask(n))};
  profile.counts.resize(n);  // at most n-1 edges
  return profile;
}

}  // namespace gainnbc
