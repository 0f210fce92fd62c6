#include "gainnbc/codec.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "gainnbc/error.hpp"

namespace gainnbc::codec {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::kParse, what); }

// Runs a JSON accessor, turning library type errors into parse errors.
template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string(what) + ": " + e.what());
  }
}

}  // namespace

GainGraph parse_gain_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = 0;
  std::vector<GainedEdge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (n == 0) {
      if (t.substr(0, 2) != "n=") bad("line " + std::to_string(lineno) + ": expected 'n=<int>'");
      auto body = trim(t.substr(2));
      auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), n);
      if (ec != std::errc{} || ptr != body.data() + body.size() || n < 1)
        bad("line " + std::to_string(lineno) + ": bad vertex count");
      continue;
    }
    GainedEdge e = parse_edge(t);
    // The file format insists on the written orientation i < j.
    auto open = t.find('(');
    auto comma = t.find(',');
    int i = 0;
    std::from_chars(t.data() + open + 1, t.data() + comma, i);
    if (i != e.lo) bad("line " + std::to_string(lineno) + ": edges must be written with i < j");
    edges.push_back(e);
  }
  if (n == 0) bad("missing 'n=<int>' header");
  return GainGraph(n, std::move(edges));
}

std::string format_gain_graph(const GainGraph& graph) {
  std::string out = "n=" + std::to_string(graph.vertex_count()) + "\n";
  for (const auto& e : graph.edges()) out += to_string(e) + "\n";
  return out;
}

Json to_json(const HeightFunction& h) {
  Json arr = Json::array();
  for (const auto& v : h.values()) arr.push_back(v ? Json(*v) : Json(nullptr));
  return arr;
}

HeightFunction height_from_json(const Json& j) {
  if (!j.is_array()) bad("heights must be an array");
  std::vector<std::optional<Height>> values;
  for (const auto& v : j) {
    if (v.is_null()) {
      values.emplace_back();
    } else if (v.is_number_integer()) {
      values.emplace_back(v.get<Height>());
    } else {
      bad("height entries must be integers or null");
    }
  }
  return HeightFunction(values);
}

Json to_json(const NbcTree& tree) {
  Json edges = Json::array();
  for (const auto& e : tree.edges()) edges.push_back(to_string(e));
  return Json{{"edges", edges}, {"heights", to_json(tree.height())}};
}

Json to_json(const NbcForest& forest) {
  Json arr = Json::array();
  for (const auto& t : forest.components) arr.push_back(to_json(t));
  return arr;
}

NbcTree nbc_tree_from_json(const Json& j, const GainGraph& graph) {
  if (!j.is_object() || !j.contains("edges")) bad("NBC tree must be an object with 'edges'");
  std::vector<GainedEdge> edges;
  guarded("NBC tree", [&] {
    for (const auto& s : j.at("edges")) edges.push_back(parse_edge(s.get<std::string>()));
    return 0;
  });
  Vertex singleton = 0;
  if (j.contains("heights")) {
    HeightFunction claimed = height_from_json(j.at("heights"));
    require(claimed.n() == graph.vertex_count(), "height array length differs from n");
    if (edges.empty()) {
      require(claimed.support_size() == 1, "a tree without edges needs exactly one vertex");
      singleton = claimed.support().front();
    }
    NbcTree t = NbcTree::certify(graph, std::move(edges), singleton);
    require(t.height() == claimed, "heights do not match the tree's edges");
    return t;
  }
  if (edges.empty()) bad("a tree without edges needs its 'heights' to name the vertex");
  return NbcTree::certify(graph, std::move(edges));
}

NbcForest nbc_forest_from_json(const Json& j, const GainGraph& graph) {
  if (!j.is_array()) bad("NBC forest must be an array of trees");
  const int n = graph.vertex_count();
  NbcForest f{n, {}};
  std::vector<int> hits(n + 1, 0);
  for (const auto& t : j) {
    f.components.push_back(nbc_tree_from_json(t, graph));
    for (Vertex v : f.components.back().support()) ++hits[v];
  }
  for (Vertex v = 1; v <= n; ++v)
    require(hits[v] == 1, "forest components do not partition [n] at vertex " + std::to_string(v));
  std::sort(f.components.begin(), f.components.end(), [](const NbcTree& x, const NbcTree& y) {
    return x.support().front() < y.support().front();
  });
  return f;
}

Json to_json(const EdgeCountProfile& profile) {
  Json obj = Json::object();
  for (std::size_t j = 0; j < profile.counts.size(); ++j) obj[std::to_string(j)] = profile.counts[j].str();
  return obj;
}

Json to_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  return arr;
}

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) bad("polynomial must be an array of decimal strings");
  std::vector<BigInt> c;
  for (const auto& v : j) {
    if (!v.is_string()) bad("polynomial coefficients must be decimal strings");
    try {
      c.emplace_back(v.get<std::string>());
    } catch (const std::exception&) {
      bad("bad coefficient '" + v.get<std::string>() + "'");
    }
  }
  return IntPolynomial(std::move(c));
}

Json to_json(const ABTree& tree) {
  Json edges = Json::array();
  for (const auto& e : tree.edges)
    edges.push_back(Json{{"parent", e.parent}, {"child", e.child}, {"weight", e.weight}});
  return Json{{"root", tree.root}, {"edges", edges}};
}

Json to_json(const ABForest& forest) {
  Json arr = Json::array();
  for (const auto& t : forest.trees) arr.push_back(to_json(t));
  return arr;
}

ABTree ab_tree_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("root")) bad("ABTree must be an object with 'root'");
  return guarded("ABTree", [&] {
    ABTree t{j.at("root").get<Vertex>(), {}};
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges"))
        t.edges.push_back({e.at("parent").get<Vertex>(), e.at("child").get<Vertex>(),
                           e.at("weight").get<long long>()});
    }
    std::sort(t.edges.begin(), t.edges.end(),
              [](const ABEdge& x, const ABEdge& y) { return x.child < y.child; });
    return t;
  });
}

ABForest ab_forest_from_json(const Json& j) {
  if (!j.is_array()) bad("ABForest must be an array of trees");
  ABForest f;
  for (const auto& t : j) f.trees.push_back(ab_tree_from_json(t));
  std::sort(f.trees.begin(), f.trees.end(), [](const ABTree& x, const ABTree& y) {
    return x.support().front() < y.support().front();
  });
  return f;
}

Json to_json(const RootedTree& tree) {
  Json edges = Json::array();
  for (const auto& [p, c] : tree.edges) edges.push_back(Json::array({p, c}));
  return Json{{"root", tree.root}, {"edges", edges}};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace gainnbc::codec
