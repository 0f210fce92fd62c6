#include "doctest.h"

#include <set>

#include "gainnbc/bijection.hpp"
#include "gainnbc/nbc.hpp"
#include "gainnbc/polynomial.hpp"
#include "helpers.hpp"

using namespace gainnbc;
using gainnbc::testing::edges_of;
using gainnbc::testing::heights;
using gainnbc::testing::kBijective;
using gainnbc::testing::range;
using gainnbc::testing::thrown_kind;

TEST_CASE("encode examples") {
  auto k4 = build_expansion({4, 0, 1});
  auto t = NbcTree::certify(k4, edges_of({"0(2,4)", "1(1,4)", "0(1,3)"}));
  CHECK(t.height() == heights({0, 1, 0, 1}));
  ABTree enc = encode_tree(t, 0, 1);
  CHECK(enc == ABTree{2, {{4, 1, 1}, {1, 3, 1}, {2, 4, 1}}});

  auto k2 = build_expansion({2, 0, 0});
  CHECK(encode_tree(NbcTree::certify(k2, edges_of({"0(1,2)"})), 0, 0) == ABTree{1, {{1, 2, 1}}});

  auto cat2 = build_expansion({2, -1, 1});
  auto neg = NbcTree::certify(cat2, edges_of({"-1(1,2)"}));
  CHECK(neg.corner() == 1);
  CHECK(encode_tree(neg, -1, 1) == ABTree{1, {{1, 2, 2}}});
}

TEST_CASE("decode examples") {
  auto t = decode_tree(ABTree{2, {{4, 1, 1}, {1, 3, 1}, {2, 4, 1}}}, 0, 1, 4);
  CHECK(std::vector<GainedEdge>(t.edges().begin(), t.edges().end()) ==
        edges_of({"0(2,4)", "1(1,4)", "0(1,3)"}));
  CHECK(t.height() == heights({0, 1, 0, 1}));

  auto neg = decode_tree(ABTree{1, {{1, 2, 2}}}, -1, 1);
  CHECK(std::vector<GainedEdge>(neg.edges().begin(), neg.edges().end()) == edges_of({"-1(1,2)"}));

  auto single = decode_tree(ABTree{3, {}}, 0, 1, 4);
  CHECK(single.support() == std::vector<Vertex>{3});
  CHECK(single.edges().empty());
}

TEST_CASE("validate_ab_tree") {
  CHECK(validate_ab_tree({1, {{1, 2, 1}}}, {1, 1}).ok);
  auto bad = validate_ab_tree({2, {{2, 1, 1}}}, {1, 0});
  CHECK_FALSE(bad.ok);
  CHECK(bad.diagnostics.size() == 1);
  CHECK(validate_ab_tree({1, {{1, 2, 2}}}, {2, 1}).ok);
  CHECK_FALSE(validate_ab_tree({1, {{1, 2, 0}}}, {2, 1}).ok);
  // not rooted: the root has a parent
  CHECK_FALSE(validate_ab_tree({1, {{2, 1, 1}, {1, 2, 1}}}, {1, 1}).ok);
  auto two = validate_ab_tree({1, {{1, 2, 3}, {2, 3, 3}}}, {2, 2});
  CHECK(two.diagnostics.size() == 2);
}

TEST_CASE("round trips over every tree") {
  for (auto [a, b] : kBijective) {
    const ABParams p = ABParams::from_gain_bounds(a, b);
    for (int n = 1; n <= 4; ++n) {
      const auto k = build_expansion({n, a, b});
      const auto nbc = enumerate_spanning_nbc_trees(k);
      for (const auto& t : nbc) {
        const ABTree enc = encode_tree(t, a, b);
        CHECK(enc.root == t.corner());
        CHECK(validate_ab_tree(enc, p).ok);
        if (a == 0 && b == 0)
          for (const auto& e : enc.edges) CHECK(e.parent < e.child);
        CHECK(decode_tree(enc, a, b, n) == t);
      }
      const auto ab = enumerate_ab_trees(range(n), p);
      for (const auto& t : ab) {
        const NbcTree dec = decode_tree(t, a, b, n);
        CHECK(dec.corner() == t.root);
        CHECK(encode_tree(dec, a, b) == t);
      }
      CHECK(nbc.size() == ab.size());
      CHECK(BigInt(ab.size()) == ab_tree_count(n, p.alpha, p.beta));
    }
  }
}

TEST_CASE("forest codecs") {
  const auto k2 = build_expansion({2, 0, 1});
  std::set<ABForest> encoded;
  for (const auto& f : enumerate_nbc_sets(k2)) {
    ABForest enc = encode_forest(f, 0, 1);
    encoded.insert(enc);
    CHECK(decode_forest(enc, 2, 0, 1).components == f.components);
  }
  const std::set<ABForest> expected{ABForest{{ABTree{1, {}}, ABTree{2, {}}}},
                                    ABForest{{ABTree{1, {{1, 2, 1}}}}},
                                    ABForest{{ABTree{2, {{2, 1, 1}}}}}};
  CHECK(encoded == expected);
  auto all = enumerate_ab_forests(2, {1, 1});
  CHECK(std::set<ABForest>(all.begin(), all.end()) == expected);

  for (const auto& f : enumerate_nbc_sets(build_expansion({3, -1, 1}))) {
    if (f.edge_count() != 0) continue;
    auto enc = encode_forest(f, -1, 1);
    REQUIRE(enc.trees.size() == 3);
    for (int v = 1; v <= 3; ++v) CHECK(enc.trees[v - 1] == ABTree{v, {}});
  }
  CHECK(enumerate_ab_forests(3, {1, 1}).size() == 16);
  CHECK(enumerate_nbc_sets(build_expansion({3, 0, 1})).size() == 16);

  CHECK_THROWS_AS(decode_forest(ABForest{{ABTree{1, {}}}}, 2, 0, 1), Error);
  CHECK_THROWS_AS(decode_forest(ABForest{{ABTree{1, {{1, 2, 1}}}, ABTree{2, {}}}}, 2, 0, 1), Error);
}

TEST_CASE("braid forests give increasing trees") {
  auto k2 = build_expansion({2, 0, 0});
  for (const auto& f : enumerate_nbc_sets(k2)) {
    auto t = braid_correspondence(f, 0, 0);
    CHECK(t.root == 0);
    if (f.edge_count() == 1) {
      CHECK(t.edges == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}});
    } else {
      CHECK(t.edges == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}});
    }
  }
  for (int n = 1; n <= 4; ++n) {
    std::vector<Vertex> labels{0};
    for (Vertex v : range(n)) labels.push_back(v);
    std::set<RootedTree> increasing;
    for (const auto& t : enumerate_rooted_trees(labels, 0)) {
      bool inc = true;
      for (auto [p, c] : t.edges) inc = inc && p < c;
      if (inc) increasing.insert(t);
    }
    const auto forests = enumerate_nbc_sets(build_expansion({n, 0, 0}));
    std::set<RootedTree> image;
    for (const auto& f : forests) image.insert(braid_correspondence(f, 0, 0));
    CHECK(image.size() == forests.size());
    CHECK(image == increasing);
    CHECK(BigInt(image.size()) == region_count(n, 0, 0));
  }
}

TEST_CASE("Shi forests give labelled trees") {
  auto one = enumerate_nbc_sets(build_expansion({1, 0, 1}));
  REQUIRE(one.size() == 1);
  CHECK(shi_correspondence(one[0], 0, 1) == RootedTree{2, {{2, 1}}});
  for (int n = 1; n <= 4; ++n) {
    std::vector<Vertex> labels = range(n + 1);
    auto all = enumerate_rooted_trees(labels, n + 1);
    const auto forests = enumerate_nbc_sets(build_expansion({n, 0, 1}));
    std::set<RootedTree> image;
    for (const auto& f : forests) image.insert(shi_correspondence(f, 0, 1));
    CHECK(image.size() == forests.size());
    CHECK(image == std::set<RootedTree>(all.begin(), all.end()));
  }
  CHECK(enumerate_nbc_sets(build_expansion({2, 0, 1})).size() == 3);
}

TEST_CASE("bijection scope") {
  auto lin = build_expansion({2, 1, 1});
  auto t = NbcTree::certify(lin, edges_of({"1(1,2)"}));
  CHECK(thrown_kind([&] { encode_tree(t, 1, 1); }) == ErrorKind::kOutOfScope);
  CHECK(thrown_kind([&] { decode_tree(ABTree{1, {}}, 1, 1); }) == ErrorKind::kOutOfScope);
  auto shi = enumerate_nbc_sets(build_expansion({2, 0, 1}));
  CHECK(thrown_kind([&] { braid_correspondence(shi[0], 0, 1); }) == ErrorKind::kOutOfScope);
  CHECK(thrown_kind([&] { shi_correspondence(shi[0], 0, 0); }) == ErrorKind::kOutOfScope);
  // gain outside [a,b]
  CHECK(thrown_kind([&] { encode_tree(t, 0, 0); }) == ErrorKind::kInvalidArgument);
  // weight outside its interval
  CHECK(thrown_kind([] { decode_tree(ABTree{2, {{2, 1, 1}}}, 0, 0); }) == ErrorKind::kInvalidArgument);
}
