#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gainnbc/gain_graph.hpp"
#include "gainnbc/height.hpp"

namespace gainnbc::testing {

inline std::vector<GainedEdge> edges_of(std::initializer_list<const char*> texts) {
  std::vector<GainedEdge> out;
  for (const char* t : texts) out.push_back(parse_edge(t));
  std::sort(out.begin(), out.end());
  return out;
}

inline HeightFunction heights(std::initializer_list<Height> values) {
  std::vector<Height> v(values);
  return HeightFunction::on_all(v);
}

inline std::vector<Vertex> range(int n) {
  std::vector<Vertex> out;
  for (int v = 1; v <= n; ++v) out.push_back(v);
  return out;
}

// (a,b) pairs with a+b in {0,1} exercised throughout.
inline const std::vector<std::pair<Gain, Gain>> kBijective{{0, 0}, {0, 1}, {-1, 1}, {-1, 2}};

}  // namespace gainnbc::testing

#include "gainnbc/error.hpp"

namespace gainnbc::testing {

// Kind of the Error thrown by f, or nullopt if nothing was thrown.
template <typename F>
std::optional<ErrorKind> thrown_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace gainnbc::testing
