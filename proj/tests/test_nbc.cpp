#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "gainnbc/error.hpp"
#include "gainnbc/nbc.hpp"
#include "gainnbc/oracle.hpp"
#include "gainnbc/polynomial.hpp"
#include "helpers.hpp"

using namespace gainnbc;
using gainnbc::testing::edges_of;
using gainnbc::testing::heights;
using gainnbc::testing::range;

namespace {

std::set<std::vector<GainedEdge>> edge_sets(const std::vector<NbcTree>& trees) {
  std::set<std::vector<GainedEdge>> out;
  for (const auto& t : trees) out.emplace(t.edges().begin(), t.edges().end());
  return out;
}

const std::vector<std::pair<Gain, Gain>> kAllShapes{{0, 0}, {0, 1}, {-1, 1}, {1, 1}, {-1, 2}, {0, 2}};

}  // namespace

TEST_CASE("NBC trees of the worked example") {
  auto k4 = build_expansion({4, 0, 1});
  auto h = heights({0, 1, 0, 1});
  auto trees = enumerate_nbc_trees(k4, h);
  CHECK(trees.size() == 4);
  std::set<std::vector<GainedEdge>> expected{
      edges_of({"1(1,2)", "0(2,4)", "0(1,3)"}), edges_of({"1(1,2)", "0(2,4)", "1(3,4)"}),
      edges_of({"0(2,4)", "1(1,4)", "0(1,3)"}), edges_of({"0(2,4)", "1(1,4)", "1(3,4)"})};
  CHECK(edge_sets(trees) == expected);
  for (const auto& t : trees) {
    CHECK(t.corner() == 2);
    CHECK(t.height() == h);
  }
  CHECK(count_nbc_trees(k4, h) == 4);
}

TEST_CASE("NBC trees of tiny graphs") {
  auto k1 = build_expansion({1, -1, 2});
  auto one = enumerate_nbc_trees(k1, heights({0}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].edges().empty());
  CHECK(one[0].corner() == 1);

  auto k2 = build_expansion({2, 0, 1});
  auto t = enumerate_nbc_trees(k2, heights({0, 1}));
  REQUIRE(t.size() == 1);
  CHECK(std::vector<GainedEdge>(t[0].edges().begin(), t[0].edges().end()) == edges_of({"1(1,2)"}));
  CHECK(t[0].corner() == 2);
}

TEST_CASE("enumerate_nbc_trees rejects disconnected selections") {
  auto k2 = build_expansion({2, 0, 1});
  CHECK_THROWS_AS(enumerate_nbc_trees(k2, heights({1, 0})), Error);
  CHECK_THROWS_AS(count_nbc_trees(build_expansion({3, 0, 0}), heights({0, 0, 1})), Error);
}

TEST_CASE("corner recursion matches the broken-circuit oracle tree by tree") {
  for (auto [a, b] : kAllShapes) {
    for (int n = 1; n <= 4; ++n) {
      auto k = build_expansion({n, a, b});
      for (const auto& h : enumerate_height_functions(k, range(n))) {
        auto sel = coherent_subgraph(k, h);
        auto order = oracle::EdgeOrder::from_height(sel, h);
        auto found = edge_sets(enumerate_nbc_trees(k, h));
        std::set<std::vector<GainedEdge>> oracle_trees;
        for (const auto& f : oracle::enumerate_forests(sel)) {
          if (f.size() + 1 != static_cast<std::size_t>(n)) continue;
          const bool nbc = oracle::is_nbc_bruteforce(f, sel, order);
          CHECK(satisfies_corner_condition(k, f, h) == nbc);
          if (nbc) oracle_trees.insert(f);
        }
        CHECK(found == oracle_trees);
        CHECK(count_nbc_trees(k, h) == found.size());
      }
    }
  }
}

TEST_CASE("removing the corner leaves enumerated NBC subtrees") {
  for (auto [a, b] : kAllShapes) {
    auto k = build_expansion({4, a, b});
    for (const auto& h : enumerate_height_functions(k, range(4))) {
      for (const auto& t : enumerate_nbc_trees(k, h)) {
        const Vertex c = t.corner();
        std::vector<GainedEdge> rest;
        for (const auto& e : t.edges())
          if (!e.touches(c)) rest.push_back(e);
        // components of the tree minus its corner
        std::map<Vertex, Vertex> root;
        for (Vertex v : t.support())
          if (v != c) root[v] = v;
        auto find = [&](Vertex v) {
          while (root[v] != v) v = root[v];
          return v;
        };
        for (const auto& e : rest) root[find(e.lo)] = find(e.hi);
        std::map<Vertex, std::vector<Vertex>> pieces;
        for (auto& [v, r] : root) pieces[find(v)].push_back(v);
        for (auto& [r, piece] : pieces) {
          auto sub_h = h.restricted(piece);
          std::vector<GainedEdge> sub;
          for (const auto& e : rest)
            if (find(e.lo) == r) sub.push_back(e);
          std::sort(sub.begin(), sub.end());
          auto listed = edge_sets(enumerate_nbc_trees(k, sub_h));
          CHECK(listed.contains(sub));
          // the restricted order is the restriction of O_h
          for (Vertex u : piece)
            for (Vertex v : piece) CHECK(compare_vertices(sub_h, u, v) == compare_vertices(h, u, v));
        }
      }
    }
  }
}

TEST_CASE("NBC forests examples") {
  auto f = enumerate_nbc_sets(build_expansion({2, 0, 1}));
  REQUIRE(f.size() == 3);
  std::set<std::vector<GainedEdge>> got;
  for (const auto& forest : f) {
    std::vector<GainedEdge> all;
    for (const auto& t : forest.components) all.insert(all.end(), t.edges().begin(), t.edges().end());
    got.insert(all);
  }
  CHECK(got == std::set<std::vector<GainedEdge>>{{}, edges_of({"0(1,2)"}), edges_of({"1(1,2)"})});

  auto single = enumerate_nbc_sets(build_expansion({1, 0, 1}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].components.size() == 1);
  CHECK(single[0].edge_count() == 0);

  CHECK(enumerate_nbc_sets(build_expansion({3, 0, 0})).size() == 6);
}

TEST_CASE("forest components partition [n] in order") {
  for (const auto& f : enumerate_nbc_sets(build_expansion({4, -1, 1}))) {
    std::vector<Vertex> seen;
    Vertex last = 0;
    for (const auto& t : f.components) {
      auto s = t.support();
      CHECK(s.front() > last);
      last = s.front();
      seen.insert(seen.end(), s.begin(), s.end());
    }
    std::sort(seen.begin(), seen.end());
    CHECK(seen == range(4));
  }
}

TEST_CASE("edge profiles") {
  auto p = nbc_edge_profile(build_expansion({2, 0, 0}));
  CHECK(p.counts == std::vector<BigInt>{1, 1});
  p = nbc_edge_profile(build_expansion({2, 0, 1}));
  CHECK(p.counts == std::vector<BigInt>{1, 2});
  p = nbc_edge_profile(build_expansion({1, -3, 5}));
  CHECK(p.counts == std::vector<BigInt>{1});
  CHECK(p.total() == 1);
}

TEST_CASE("profile agrees with listed forests, brute force, and tree counts") {
  for (auto [a, b] : kAllShapes) {
    for (int n = 1; n <= 4; ++n) {
      auto k = build_expansion({n, a, b});
      auto profile = nbc_edge_profile(k);
      REQUIRE(profile.counts.size() == static_cast<std::size_t>(n));
      CHECK(profile.counts[0] == 1);

      std::vector<BigInt> by_edges(n, 0);
      for (const auto& f : enumerate_nbc_sets(k)) by_edges[f.edge_count()] += 1;
      CHECK(by_edges == profile.counts);

      auto brute = oracle::count_nbc_bruteforce(k, oracle::EdgeOrder::canonical(k));
      CHECK(brute.by_edges == profile.counts);

      const auto spanning = enumerate_spanning_nbc_trees(k);
      CHECK(profile.counts[n - 1] == spanning.size());
      if (a + b == 0 || a + b == 1) CHECK(profile.counts[n - 1] == ab_tree_count(n, 1 - a, b));
    }
  }
}

TEST_CASE("NbcTree::certify") {
  auto k3 = build_expansion({3, 0, 0});
  CHECK_NOTHROW(NbcTree::certify(k3, edges_of({"0(1,2)", "0(1,3)"})));
  CHECK_THROWS_AS(NbcTree::certify(k3, edges_of({"0(1,3)", "0(2,3)"})), Error);
  auto single = NbcTree::certify(k3, {}, 2);
  CHECK(single.support() == std::vector<Vertex>{2});
  CHECK_THROWS_AS(NbcTree::certify(k3, {}, 0), Error);
  CHECK_THROWS_AS(NbcTree::certify(k3, edges_of({"1(1,2)"})), Error);
}
