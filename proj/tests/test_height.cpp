#include "doctest.h"

#include <algorithm>
#include <set>

#include "gainnbc/error.hpp"
#include "gainnbc/height.hpp"
#include "helpers.hpp"

using namespace gainnbc;
using gainnbc::testing::edges_of;
using gainnbc::testing::heights;
using gainnbc::testing::range;

TEST_CASE("height function basics") {
  auto h = heights({0, 1, 0, 1});
  CHECK(h.corner() == 2);
  CHECK(h.max_height() == 1);
  CHECK(h.support() == std::vector<Vertex>{1, 2, 3, 4});
  CHECK_THROWS_AS(heights({1, 2}), Error);   // 0 not attained
  CHECK_THROWS_AS(heights({0, -1}), Error);  // negative

  auto r = heights({3, 5, 4, 0}).restricted(std::vector<Vertex>{1, 2, 3});
  CHECK(r.values() == std::vector<std::optional<Height>>{0, 2, 1, std::nullopt});
  CHECK(r.corner() == 2);
  CHECK_FALSE(r.defined_at(4));
}

TEST_CASE("height_of_balanced_tree") {
  auto k4 = build_expansion({4, 0, 1});
  auto h = height_of_balanced_tree(edges_of({"1(1,2)", "0(1,3)", "1(3,4)"}), k4);
  CHECK(h == heights({0, 1, 0, 1}));
  CHECK(h.corner() == 2);

  auto k2 = build_expansion({2, -1, 1});
  auto flat = height_of_balanced_tree(edges_of({"0(1,2)"}), k2);
  CHECK(flat == heights({0, 0}));
  CHECK(flat.corner() == 1);

  auto down = height_of_balanced_tree(edges_of({"-1(1,2)"}), k2);
  CHECK(down == heights({1, 0}));
  CHECK(down.corner() == 1);

  // partial support
  auto part = height_of_balanced_tree(edges_of({"1(2,4)"}), k4);
  CHECK(part.values() == std::vector<std::optional<Height>>{std::nullopt, 0, std::nullopt, 1});
}

TEST_CASE("height_of_balanced_tree rejects non-trees") {
  auto k3 = build_expansion({3, 0, 1});
  CHECK_THROWS_AS(height_of_balanced_tree({}, k3), Error);
  CHECK_THROWS_AS(height_of_balanced_tree(edges_of({"0(1,2)", "1(1,2)"}), k3), Error);
  CHECK_THROWS_AS(height_of_balanced_tree(edges_of({"0(1,2)", "0(2,3)", "0(1,3)"}), k3), Error);
  CHECK_THROWS_AS(height_of_balanced_tree(edges_of({"3(1,2)"}), k3), Error);
}

TEST_CASE("coherent_subgraph of the worked example") {
  auto k4 = build_expansion({4, 0, 1});
  auto sel = coherent_subgraph(k4, heights({0, 1, 0, 1}));
  CHECK(sel.edge_count() == 5);
  auto expected = edges_of({"1(1,2)", "0(1,3)", "1(1,4)", "0(2,4)", "1(3,4)"});
  CHECK(std::vector<GainedEdge>(sel.edges().begin(), sel.edges().end()) == expected);

  auto flat = coherent_subgraph(build_expansion({4, -1, 2}), heights({0, 0, 0, 0}));
  CHECK(flat.edge_count() == 6);
  for (const auto& e : flat.edges()) CHECK(e.gain == 0);
}

TEST_CASE("O_h orders") {
  auto h = heights({0, 1, 0, 1});
  std::vector<Vertex> vs{1, 2, 3, 4};
  std::sort(vs.begin(), vs.end(), [&](Vertex u, Vertex v) { return compare_vertices(h, u, v) < 0; });
  CHECK(vs == std::vector<Vertex>{2, 4, 1, 3});

  auto es = edges_of({"1(1,2)", "0(1,3)", "1(1,4)", "0(2,4)", "1(3,4)"});
  std::sort(es.begin(), es.end(),
            [&](const GainedEdge& x, const GainedEdge& y) { return compare_edges(h, x, y) < 0; });
  CHECK(es == std::vector<GainedEdge>{parse_edge("0(2,4)"), parse_edge("1(1,2)"), parse_edge("1(1,4)"),
                                      parse_edge("1(3,4)"), parse_edge("0(1,3)")});

  auto flat = heights({0, 0, 0, 0, 0});
  for (Vertex u = 1; u <= 5; ++u)
    for (Vertex v = 1; v <= 5; ++v) CHECK((compare_vertices(flat, u, v) < 0) == (u < v));
}

TEST_CASE("O_h is a strict total order on vertices and on coherent edges") {
  auto k = build_expansion({4, -1, 2});
  for (const auto& h : enumerate_height_functions(k, range(4))) {
    auto sel = coherent_subgraph(k, h);
    auto es = std::vector<GainedEdge>(sel.edges().begin(), sel.edges().end());
    for (const auto& x : es) {
      CHECK(compare_edges(h, x, x) == 0);
      for (const auto& y : es) {
        if (x == y) continue;
        CHECK(compare_edges(h, x, y) != 0);
        CHECK((compare_edges(h, x, y) < 0) == (compare_edges(h, y, x) > 0));
        for (const auto& z : es)
          if (compare_edges(h, x, y) < 0 && compare_edges(h, y, z) < 0) CHECK(compare_edges(h, x, z) < 0);
      }
    }
    for (Vertex u = 1; u <= 4; ++u)
      for (Vertex v = 1; v <= 4; ++v) CHECK((compare_vertices(h, u, v) == 0) == (u == v));
  }
}

TEST_CASE("coherent edges of an expansion match height gaps") {
  auto k = build_expansion({4, -1, 2});
  auto h = heights({0, 3, 1, 2});
  auto sel = coherent_subgraph(k, h);
  std::size_t expected = 0;
  for (Vertex i = 1; i <= 4; ++i)
    for (Vertex j = i + 1; j <= 4; ++j) {
      Height gap = h.at(j) - h.at(i);
      if (gap >= -1 && gap <= 2) ++expected;
    }
  CHECK(sel.edge_count() == expected);
  for (const auto& e : sel.edges()) CHECK(h.at(e.hi) - h.at(e.lo) == e.gain);
}

TEST_CASE("enumerate_height_functions examples") {
  auto hs = enumerate_height_functions(build_expansion({2, 0, 0}), range(2));
  REQUIRE(hs.size() == 1);
  CHECK(hs[0] == heights({0, 0}));

  hs = enumerate_height_functions(build_expansion({2, 0, 1}), range(2));
  CHECK(hs == std::vector<HeightFunction>{heights({0, 0}), heights({0, 1})});

  hs = enumerate_height_functions(build_expansion({4, 0, 1}), range(4));
  CHECK(std::find(hs.begin(), hs.end(), heights({0, 1, 0, 1})) != hs.end());

  CHECK_THROWS_AS(enumerate_height_functions(build_expansion({2, 0, 1}), {}), Error);
}

namespace {

bool connected_on(const GainGraph& sel, const std::vector<Vertex>& support) {
  std::set<Vertex> seen{support.front()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& e : sel.edges())
      if (seen.contains(e.lo) != seen.contains(e.hi)) {
        seen.insert(e.lo);
        seen.insert(e.hi);
        grew = true;
      }
  }
  return seen.size() == support.size();
}

// Every vector in [0, bound]^|S| with a zero entry, filtered by connectivity of Phi[h]|S.
std::set<std::vector<std::optional<Height>>> brute_heights(const GainGraph& g,
                                                           const std::vector<Vertex>& support) {
  const Height bound = static_cast<Height>(support.size() - 1) * g.max_abs_gain();
  std::set<std::vector<std::optional<Height>>> out;
  std::vector<Height> cur(support.size(), 0);
  while (true) {
    if (std::find(cur.begin(), cur.end(), 0) != cur.end()) {
      std::vector<std::optional<Height>> values(g.vertex_count());
      for (std::size_t i = 0; i < support.size(); ++i) values[support[i] - 1] = cur[i];
      HeightFunction h(values);
      if (connected_on(coherent_subgraph(g, h), support)) out.insert(values);
    }
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == bound) cur[i++] = 0;
    if (i == cur.size()) break;
    ++cur[i];
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate_height_functions agrees with brute force") {
  for (auto [a, b] : std::vector<std::pair<Gain, Gain>>{{0, 0}, {0, 1}, {-1, 1}, {1, 1}, {-1, 2}, {2, 3}}) {
    for (int n = 1; n <= 4; ++n) {
      auto g = build_expansion({n, a, b});
      for (auto support : std::vector<std::vector<Vertex>>{range(n), {1}, {1, n}}) {
        if (support.size() == 2 && n < 2) continue;
        auto got = enumerate_height_functions(g, support);
        std::set<std::vector<std::optional<Height>>> seen;
        for (const auto& h : got) {
          CHECK(seen.insert(h.values()).second);  // no duplicates
          CHECK(h.support() == support);
        }
        CHECK(seen == brute_heights(g, support));
      }
    }
  }
}

TEST_CASE("tree heights select the tree") {
  auto k = build_expansion({4, -1, 2});
  std::vector<std::vector<GainedEdge>> trees{edges_of({"2(1,2)", "-1(2,3)", "0(3,4)"}),
                                             edges_of({"-1(1,4)", "2(2,4)", "1(3,4)"})};
  for (const auto& t : trees) {
    auto sel = coherent_subgraph(k, height_of_balanced_tree(t, k));
    for (const auto& e : t) CHECK(sel.contains(e));
  }
}
