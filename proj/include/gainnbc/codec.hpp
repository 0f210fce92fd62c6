#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gainnbc/bijection.hpp"
#include "gainnbc/gain_graph.hpp"
#include "gainnbc/height.hpp"
#include "gainnbc/nbc.hpp"
#include "gainnbc/polynomial.hpp"

// Text and JSON interchange formats.
namespace gainnbc::codec {

using Json = nlohmann::json;

// Gain graph text: a header line `n=<int>` then one `g(i,j)` per line with i < j.
// Blank lines and lines starting with '#' are ignored.
GainGraph parse_gain_graph(std::string_view text);
std::string format_gain_graph(const GainGraph& graph);

// Heights: array of n entries, index v-1; null outside the support.
Json to_json(const HeightFunction& h);
HeightFunction height_from_json(const Json& j);

// NBC tree: {"edges": ["g(i,j)", ...], "heights": [...]}; forest: array of trees.
Json to_json(const NbcTree& tree);
Json to_json(const NbcForest& forest);
NbcTree nbc_tree_from_json(const Json& j, const GainGraph& graph);
NbcForest nbc_forest_from_json(const Json& j, const GainGraph& graph);

// Profile: {"0": "1", "1": "2", ...}, counts as decimal strings.
Json to_json(const EdgeCountProfile& profile);

// Polynomial: ascending decimal coefficient strings.
Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

// ABTree: {"root": r, "edges": [{"parent", "child", "weight"}]}; forest: array of trees.
Json to_json(const ABTree& tree);
Json to_json(const ABForest& forest);
ABTree ab_tree_from_json(const Json& j);
ABForest ab_forest_from_json(const Json& j);

// Rooted tree: {"root": r, "edges": [[parent, child], ...]}.
Json to_json(const RootedTree& tree);

/// Parses JSON text, mapping syntax errors to ErrorKind::kParse.
Json parse_json(std::string_view text);

}  // namespace gainnbc::codec
