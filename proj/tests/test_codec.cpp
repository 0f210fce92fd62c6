#include "doctest.h"

#include "gainnbc/codec.hpp"
#include "gainnbc/error.hpp"
#include "helpers.hpp"

using namespace gainnbc;
using namespace gainnbc::codec;
using gainnbc::testing::edges_of;
using gainnbc::testing::heights;
using gainnbc::testing::thrown_kind;

TEST_CASE("gain graph text round trip") {
  auto k = build_expansion({3, -1, 1});
  auto text = format_gain_graph(k);
  CHECK(text.rfind("n=3\n-1(1,2)\n", 0) == 0);
  auto back = parse_gain_graph(text);
  CHECK(back.vertex_count() == 3);
  CHECK(std::equal(back.edges().begin(), back.edges().end(), k.edges().begin(), k.edges().end()));

  auto commented = parse_gain_graph("# triangle\n\nn=3\n 0(1,2)\n0(2,3)\n# tail\n0(1,3)\n");
  CHECK(commented.edge_count() == 3);
  CHECK(thrown_kind([] { parse_gain_graph("0(1,2)\n"); }) == ErrorKind::kParse);
  CHECK(thrown_kind([] { parse_gain_graph("n=2\n1(2,1)\n"); }) == ErrorKind::kParse);
  CHECK(thrown_kind([] { parse_gain_graph("n=x\n"); }) == ErrorKind::kParse);
  CHECK(thrown_kind([] { parse_gain_graph(""); }) == ErrorKind::kParse);
  CHECK(thrown_kind([] { parse_gain_graph("n=2\n0(1,3)\n"); }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("heights JSON") {
  std::vector<std::optional<Height>> partial{std::nullopt, 2, 0};
  HeightFunction h(partial);
  auto j = to_json(h);
  CHECK(j.dump() == "[null,2,0]");
  CHECK(height_from_json(j) == h);
  CHECK(thrown_kind([] { height_from_json(Json::parse(R"j(["a"])j")); }) == ErrorKind::kParse);
  CHECK(thrown_kind([] { height_from_json(Json::object()); }) == ErrorKind::kParse);
}

TEST_CASE("NBC tree JSON") {
  auto k4 = build_expansion({4, 0, 1});
  auto t = NbcTree::certify(k4, edges_of({"0(2,4)", "1(1,4)", "0(1,3)"}));
  auto j = to_json(t);
  CHECK(j.dump() == R"j({"edges":["0(1,3)","1(1,4)","0(2,4)"],"heights":[0,1,0,1]})j");
  CHECK(nbc_tree_from_json(j, k4) == t);
  // heights are optional when there are edges
  CHECK(nbc_tree_from_json(Json{{"edges", j["edges"]}}, k4) == t);

  auto single = nbc_tree_from_json(Json::parse(R"j({"edges":[],"heights":[null,0,null,null]})j"), k4);
  CHECK(single.support() == std::vector<Vertex>{2});

  CHECK(thrown_kind([&] { nbc_tree_from_json(Json::parse(R"j({"edges":[]})j"), k4); }) ==
        ErrorKind::kParse);
  CHECK(thrown_kind([&] {
          nbc_tree_from_json(Json::parse(R"j({"edges":["0(1,3)"],"heights":[1,null,1,null]})j"), k4);
        }) == ErrorKind::kInvalidArgument);
  CHECK(thrown_kind([&] { nbc_tree_from_json(Json::parse(R"j({"edges":[3]})j"), k4); }) ==
        ErrorKind::kParse);
  auto k3 = build_expansion({3, 0, 0});
  CHECK(thrown_kind([&] { nbc_tree_from_json(Json::parse(R"j({"edges":["0(1,3)","0(2,3)"]})j"), k3); }) ==
        ErrorKind::kInvalidArgument);
}

TEST_CASE("NBC forest JSON") {
  auto k2 = build_expansion({2, 0, 1});
  for (const auto& f : enumerate_nbc_sets(k2)) {
    auto back = nbc_forest_from_json(to_json(f), k2);
    CHECK(back.components == f.components);
  }
  auto one = Json::parse(R"j([{"edges":[],"heights":[0,null]}])j");
  CHECK_THROWS_AS(nbc_forest_from_json(one, k2), Error);
  CHECK(thrown_kind([&] { nbc_forest_from_json(Json::object(), k2); }) == ErrorKind::kParse);
}

TEST_CASE("profile and polynomial JSON") {
  CHECK(to_json(EdgeCountProfile{2, {1, 2}}).dump() == R"j({"0":"1","1":"2"})j");
  IntPolynomial p{0, 9, -6, 1};
  CHECK(to_json(p).dump() == R"j(["0","9","-6","1"])j");
  CHECK(polynomial_from_json(to_json(p)) == p);
  BigInt huge("123456789012345678901234567890");
  IntPolynomial big(std::vector<BigInt>{huge});
  CHECK(polynomial_from_json(to_json(big)) == big);
  CHECK(thrown_kind([] { polynomial_from_json(Json::parse("[1]")); }) == ErrorKind::kParse);
  CHECK(thrown_kind([] { polynomial_from_json(Json::parse(R"j(["1x"])j")); }) == ErrorKind::kParse);
}

TEST_CASE("ABTree JSON") {
  ABTree t{2, {{4, 1, 1}, {1, 3, 1}, {2, 4, 1}}};
  auto j = to_json(t);
  CHECK(j["root"] == 2);
  CHECK(ab_tree_from_json(j) == t);
  // edge order in the input does not matter
  auto shuffled = Json::parse(R"j({"root":2,"edges":[{"parent":2,"child":4,"weight":1},
      {"parent":1,"child":3,"weight":1},{"parent":4,"child":1,"weight":1}]})j");
  CHECK(ab_tree_from_json(shuffled) == t);
  CHECK(ab_tree_from_json(Json::parse(R"j({"root":5})j")) == ABTree{5, {}});

  ABForest f{{ABTree{2, {}}, ABTree{1, {{1, 3, 1}}}}};
  auto back = ab_forest_from_json(to_json(f));
  CHECK(back.trees.front().root == 1);
  CHECK(thrown_kind([] { ab_tree_from_json(Json::parse(R"j({"root":"x"})j")); }) == ErrorKind::kParse);
  CHECK(thrown_kind([] { ab_tree_from_json(Json::parse(R"j({"root":1,"edges":[{"parent":1}]})j")); }) ==
        ErrorKind::kParse);
}

TEST_CASE("rooted tree JSON and parse errors") {
  CHECK(to_json(RootedTree{0, {{0, 1}, {1, 2}}}).dump() == R"j({"edges":[[0,1],[1,2]],"root":0})j");
  CHECK(thrown_kind([] { parse_json("{"); }) == ErrorKind::kParse);
  CHECK(parse_json(" [1] ").size() == 1);
}
