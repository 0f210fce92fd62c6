#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gainnbc/bigint.hpp"
#include "gainnbc/gain_graph.hpp"
#include "gainnbc/height.hpp"
#include "gainnbc/polynomial.hpp"

// Brute-force checks built straight from the definitions: balanced circles, broken
// circuits, and point counts over finite fields. Deliberately independent of the
// height-function machinery used by the enumerators.
namespace gainnbc::oracle {

/// A balanced circle: vertices[i] and vertices[i+1 mod l] are joined by edges[i]
/// (indices into the graph). Starts at its smallest vertex, heading to the smaller neighbour.
struct BalancedCircle {
  std::vector<Vertex> vertices;
  std::vector<std::size_t> edges;
  friend bool operator==(const BalancedCircle&, const BalancedCircle&) = default;
};

std::vector<BalancedCircle> enumerate_balanced_circles(const GainGraph& graph);

/// A total order on the edges of one graph, stored as a rank per edge index.
class EdgeOrder {
 public:
  /// (lo, hi, gain) order, i.e. the graph's storage order.
  static EdgeOrder canonical(const GainGraph& graph);
  static EdgeOrder reversed(const GainGraph& graph);
  /// O_h on the endpoints (h must be defined on every vertex), gains breaking ties.
  static EdgeOrder from_height(const GainGraph& graph, const HeightFunction& h);
  /// `sequence` lists every edge index once, smallest first.
  static EdgeOrder from_sequence(const GainGraph& graph, std::span<const std::size_t> sequence);

  bool less(std::size_t e1, std::size_t e2) const { return rank_[e1] < rank_[e2]; }
  std::size_t size() const { return rank_.size(); }

 private:
  explicit EdgeOrder(std::vector<std::size_t> rank) : rank_(std::move(rank)) {}
  std::vector<std::size_t> rank_;
};

/// True iff `forest` contains no broken circuit of `graph` under `order`.
/// Throws unless `forest` is an acyclic subset of the graph's edges.
bool is_nbc_bruteforce(std::span<const GainedEdge> forest, const GainGraph& graph,
                       const EdgeOrder& order);

struct NbcCount {
  BigInt total;
  std::vector<BigInt> by_edges;  // index = number of edges, size n
};

inline constexpr int kDefaultMaxVertices = 6;

/// Counts NBC forests by exhaustive search over edge subsets.
/// Refuses graphs with more than `max_vertices` vertices or 64 edges.
NbcCount count_nbc_bruteforce(const GainGraph& graph, const EdgeOrder& order,
                              int max_vertices = kDefaultMaxVertices);

/// Every forest (acyclic edge subset) of a small graph, edges sorted.
std::vector<std::vector<GainedEdge>> enumerate_forests(const GainGraph& graph,
                                                       int max_vertices = kDefaultMaxVertices);

inline constexpr std::uint64_t kDefaultMaxPoints = 10'000'000;

bool is_prime(std::uint64_t q);
/// Primes above this bound give the exact characteristic polynomial value.
std::uint64_t prime_bound(const GainGraph& graph);
/// The `count` smallest primes above prime_bound(graph).
std::vector<std::uint64_t> admissible_primes(const GainGraph& graph, std::size_t count);

/// #{x in (Z/q)^n : x_hi - x_lo != gain (mod q) for every edge}.
/// Throws kGuard when q^n exceeds `max_points`.
BigInt finite_field_count(const GainGraph& graph, std::uint64_t q,
                          std::uint64_t max_points = kDefaultMaxPoints);

/// Interpolates chi through point counts at `primes` (at least n+1 admissible ones).
/// Fails loudly on non-integral or over-degree fits.
IntPolynomial charpoly_interpolated(const GainGraph& graph, std::span<const std::uint64_t> primes,
                                    std::uint64_t max_points = kDefaultMaxPoints);

/// Zaslavsky: (-1)^n chi(-1); `chi` must have degree n.
BigInt regions_from_charpoly(const IntPolynomial& chi, int n);

}  // namespace gainnbc::oracle
