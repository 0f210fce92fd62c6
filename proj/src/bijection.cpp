#include "gainnbc/bijection.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "gainnbc/error.hpp"
#include "gainnbc/height.hpp"
#include "mask.hpp"

namespace gainnbc {

std::vector<Vertex> ABTree::support() const {
  std::vector<Vertex> out{root};
  for (const auto& e : edges) out.push_back(e.child);
  std::sort(out.begin(), out.end());
  return out;
}

ABValidation validate_ab_tree(const ABTree& tree, const ABParams& params) {
  ABValidation report;
  auto flag = [&](std::string msg) {
    report.ok = false;
    report.diagnostics.push_back(std::move(msg));
  };
  if (tree.root < 1) flag("root " + std::to_string(tree.root) + " is not a positive label");

  std::map<Vertex, const ABEdge*> parent_of;
  for (const auto& e : tree.edges) {
    if (e.child == tree.root) flag("root " + std::to_string(e.child) + " has a parent");
    if (!parent_of.emplace(e.child, &e).second)
      flag("vertex " + std::to_string(e.child) + " has two parents");
  }
  for (const auto& e : tree.edges) {
    if (e.parent != tree.root && !parent_of.contains(e.parent))
      flag("parent " + std::to_string(e.parent) + " is not on the tree");
  }
  // Every vertex must climb to the root without revisiting.
  for (const auto& [child, edge] : parent_of) {
    std::set<Vertex> seen{child};
    Vertex v = edge->parent;
    while (v != tree.root) {
      auto it = parent_of.find(v);
      if (it == parent_of.end() || !seen.insert(v).second) {
        flag("vertex " + std::to_string(child) + " does not reach the root");
        break;
      }
      v = it->second->parent;
    }
  }

  for (const auto& e : tree.edges) {
    const bool up = e.parent < e.child;
    const long long cap = up ? params.alpha : params.beta;
    if (e.weight < 1 || e.weight > cap) {
      flag("edge " + std::to_string(e.parent) + "->" + std::to_string(e.child) + " weight " +
           std::to_string(e.weight) + " outside [1," + std::to_string(cap) + "]");
    }
  }
  return report;
}

namespace {

void require_bijective(Gain a, Gain b) {
  require(a <= b, "gain bounds require a <= b");
  if (a + b != 0 && a + b != 1) {
    fail(ErrorKind::kOutOfScope, "the tree bijection needs a+b in {0,1}");
  }
}

GainGraph ambient_graph(int n, Gain a, Gain b) { return build_expansion({n, a, b}); }

}  // namespace

ABTree encode_tree(const NbcTree& tree, Gain a, Gain b) {
  require_bijective(a, b);
  const int n = tree.height().n();
  for (const auto& e : tree.edges())
    require(e.gain >= a && e.gain <= b, "edge " + to_string(e) + " is not in K_n^{ab}");
  if (!satisfies_corner_condition(ambient_graph(n, a, b), tree.edges(), tree.height())) {
    fail(ErrorKind::kInvalidArgument, "tree is not an NBC tree of K_n^{ab}");
  }

  std::map<Vertex, std::vector<const GainedEdge*>> adj;
  for (const auto& e : tree.edges()) {
    adj[e.lo].push_back(&e);
    adj[e.hi].push_back(&e);
  }
  ABTree out{tree.corner(), {}};
  std::set<Vertex> seen{out.root};
  std::queue<Vertex> todo;
  todo.push(out.root);
  while (!todo.empty()) {
    const Vertex p = todo.front();
    todo.pop();
    for (const GainedEdge* e : adj[p]) {
      const Vertex c = e->other(p);
      if (!seen.insert(c).second) continue;
      out.edges.push_back({p, c, e->gain > 0 ? e->gain : 1 - e->gain});
      todo.push(c);
    }
  }
  std::sort(out.edges.begin(), out.edges.end(),
            [](const ABEdge& x, const ABEdge& y) { return x.child < y.child; });

  auto check = validate_ab_tree(out, ABParams::from_gain_bounds(a, b));
  if (!check.ok) fail(ErrorKind::kInternal, "encoded tree violates: " + check.diagnostics.front());
  return out;
}

NbcTree decode_tree(const ABTree& tree, Gain a, Gain b, int n) {
  require_bijective(a, b);
  auto check = validate_ab_tree(tree, ABParams::from_gain_bounds(a, b));
  if (!check.ok) fail(ErrorKind::kInvalidArgument, "invalid (1-a,b)-tree: " + check.diagnostics.front());
  const auto support = tree.support();
  if (n == 0) n = support.back();
  require(support.back() <= n, "tree vertex exceeds n");

  std::map<Vertex, std::vector<const ABEdge*>> children;
  for (const auto& e : tree.edges) children[e.parent].push_back(&e);
  std::vector<GainedEdge> edges;
  std::queue<Vertex> todo;
  todo.push(tree.root);
  while (!todo.empty()) {
    const Vertex p = todo.front();
    todo.pop();
    for (const ABEdge* e : children[p]) {
      // parent < child: gain 1-w on (p,c); parent > child: gain w on (c,p).
      const Gain g = e->parent < e->child ? 1 - e->weight : e->weight;
      const GainedEdge edge = e->parent < e->child ? GainedEdge{p, e->child, g}
                                                   : GainedEdge{e->child, p, g};
      edges.push_back(edge);
      todo.push(e->child);
    }
  }

  NbcTree out = NbcTree::certify(ambient_graph(n, a, b), std::move(edges), tree.root);
  if (out.corner() != tree.root) {
    fail(ErrorKind::kInternal, "decoded root " + std::to_string(tree.root) +
                                   " is not the corner " + std::to_string(out.corner()));
  }
  return out;
}

ABForest encode_forest(const NbcForest& forest, Gain a, Gain b) {
  ABForest out;
  for (const auto& t : forest.components) out.trees.push_back(encode_tree(t, a, b));
  return out;
}

NbcForest decode_forest(const ABForest& forest, int n, Gain a, Gain b) {
  require(n >= 1, "n must be at least 1");
  std::vector<int> hits(n + 1, 0);
  NbcForest out{n, {}};
  for (const auto& t : forest.trees) {
    for (Vertex v : t.support()) {
      require(v >= 1 && v <= n, "forest vertex " + std::to_string(v) + " outside [n]");
      ++hits[v];
    }
    out.components.push_back(decode_tree(t, a, b, n));
  }
  for (Vertex v = 1; v <= n; ++v)
    require(hits[v] == 1, "forest supports do not partition [n] at vertex " + std::to_string(v));
  std::sort(out.components.begin(), out.components.end(), [](const NbcTree& x, const NbcTree& y) {
    return x.support().front() < y.support().front();
  });
  return out;
}

namespace {

RootedTree attach_components(const NbcForest& forest, Gain a, Gain b, Vertex hub) {
  RootedTree out{hub, {}};
  std::vector<Vertex> roots;
  for (const auto& t : forest.components) {
    const ABTree enc = encode_tree(t, a, b);
    roots.push_back(enc.root);
    for (const auto& e : enc.edges) out.edges.emplace_back(e.parent, e.child);
  }
  std::sort(roots.begin(), roots.end());
  for (Vertex r : roots) out.edges.emplace_back(hub, r);
  std::sort(out.edges.begin(), out.edges.end(),
            [](const auto& x, const auto& y) { return x.second < y.second; });
  return out;
}

}  // namespace

RootedTree braid_correspondence(const NbcForest& forest, Gain a, Gain b) {
  if (a != 0 || b != 0) fail(ErrorKind::kOutOfScope, "braid correspondence needs a=b=0");
  return attach_components(forest, a, b, 0);
}

RootedTree shi_correspondence(const NbcForest& forest, Gain a, Gain b) {
  if (a != 0 || b != 1) fail(ErrorKind::kOutOfScope, "Shi correspondence needs a=0, b=1");
  return attach_components(forest, a, b, forest.n + 1);
}

std::vector<RootedTree> enumerate_rooted_trees(const std::vector<Vertex>& labels, Vertex root) {
  std::vector<Vertex> others;
  for (Vertex v : labels)
    if (v != root) others.push_back(v);
  std::sort(others.begin(), others.end());
  std::vector<RootedTree> out;
  std::map<Vertex, Vertex> parent;

  auto reaches_root = [&](Vertex v) {
    for (std::size_t steps = 0; steps <= others.size(); ++steps) {
      if (v == root) return true;
      v = parent.at(v);
    }
    return false;
  };
  auto assign = [&](auto&& self, std::size_t i) -> void {
    if (i == others.size()) {
      for (Vertex v : others)
        if (!reaches_root(v)) return;
      RootedTree t{root, {}};
      for (Vertex v : others) t.edges.emplace_back(parent[v], v);
      out.push_back(std::move(t));
      return;
    }
    for (Vertex p : labels) {
      if (p == others[i]) continue;
      parent[others[i]] = p;
      self(self, i + 1);
    }
  };
  assign(assign, 0);
  return out;
}

std::vector<ABTree> enumerate_ab_trees(const std::vector<Vertex>& support, const ABParams& params) {
  std::vector<ABTree> out;
  for (Vertex root : support) {
    for (const auto& shape : enumerate_rooted_trees(support, root)) {
      ABTree t{root, {}};
      auto weigh = [&](auto&& self, std::size_t i) -> void {
        if (i == shape.edges.size()) {
          out.push_back(t);
          return;
        }
        const auto [p, c] = shape.edges[i];
        const long long cap = p < c ? params.alpha : params.beta;
        for (long long w = 1; w <= cap; ++w) {
          t.edges.push_back({p, c, w});
          self(self, i + 1);
          t.edges.pop_back();
        }
      };
      weigh(weigh, 0);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ABForest> enumerate_ab_forests(int n, const ABParams& params) {
  require(n >= 1, "n must be at least 1");
  detail::require_mask_range(n);
  std::map<detail::Mask, std::vector<ABTree>> per_block;
  auto trees_on = [&](detail::Mask block) -> const std::vector<ABTree>& {
    auto it = per_block.find(block);
    if (it == per_block.end())
      it = per_block.emplace(block, enumerate_ab_trees(detail::vertices(block), params)).first;
    return it->second;
  };

  std::vector<ABForest> out;
  ABForest cur;
  auto split = [&](auto&& self, detail::Mask rem) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    const detail::Mask anchor = rem & (~rem + 1);
    auto use = [&](detail::Mask block) {
      for (const auto& t : trees_on(block)) {
        cur.trees.push_back(t);
        self(self, rem & ~block);
        cur.trees.pop_back();
      }
    };
    use(anchor);
    detail::for_each_submask(rem & ~anchor, [&](detail::Mask sub) { use(anchor | sub); });
  };
  split(split, (detail::Mask{1} << n) - 1);
  return out;
}

}  // namespace gainnbc
