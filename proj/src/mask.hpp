#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "gainnbc/error.hpp"
#include "gainnbc/gain_graph.hpp"

namespace gainnbc::detail {

// Vertex v occupies bit v-1.
using Mask = std::uint64_t;

inline constexpr int kMaxMaskVertices = 63;

inline Mask bit(Vertex v) { return Mask{1} << (v - 1); }
inline Vertex lowest(Mask m) { return std::countr_zero(m) + 1; }
inline int size(Mask m) { return std::popcount(m); }

inline std::vector<Vertex> vertices(Mask m) {
  std::vector<Vertex> out;
  for (; m != 0; m &= m - 1) out.push_back(lowest(m));
  return out;
}

inline Mask mask_of(std::span<const Vertex> vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

inline void require_mask_range(int n) {
  if (n > kMaxMaskVertices) {
    fail(ErrorKind::kGuard, "exhaustive enumeration supports at most 63 vertices");
  }
}

// Calls f(sub) for every nonempty submask of m (including m itself).
template <typename F>
void for_each_submask(Mask m, F&& f) {
  for (Mask s = m; s != 0; s = (s - 1) & m) f(s);
}

}  // namespace gainnbc::detail
