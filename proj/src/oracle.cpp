#include "gainnbc/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "gainnbc/error.hpp"

namespace gainnbc::oracle {

namespace {

// Edge indices per unordered vertex pair.
class PairIndex {
 public:
  explicit PairIndex(const GainGraph& graph)
      : n_(graph.vertex_count()), slots_((n_ + 1) * (n_ + 1)) {
    for (std::size_t i = 0; i < graph.edge_count(); ++i) {
      const auto& e = graph.edge(i);
      slots_[e.lo * (n_ + 1) + e.hi].push_back(i);
      slots_[e.hi * (n_ + 1) + e.lo].push_back(i);
    }
  }
  const std::vector<std::size_t>& between(Vertex u, Vertex v) const {
    return slots_[u * (n_ + 1) + v];
  }

 private:
  int n_;
  std::vector<std::vector<std::size_t>> slots_;
};

struct UnionFind {
  explicit UnionFind(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
  std::vector<int> parent;
};

void guard_size(const GainGraph& graph, int max_vertices) {
  if (graph.vertex_count() > max_vertices) {
    fail(ErrorKind::kGuard, "brute-force oracle limited to n <= " + std::to_string(max_vertices));
  }
  if (graph.edge_count() > 64) fail(ErrorKind::kGuard, "brute-force oracle limited to 64 edges");
}

}  // namespace

std::vector<BalancedCircle> enumerate_balanced_circles(const GainGraph& graph) {
  const PairIndex pairs(graph);
  const int n = graph.vertex_count();
  std::vector<BalancedCircle> out;
  std::vector<Vertex> path;
  std::vector<std::size_t> used;
  std::vector<bool> on_path(n + 1, false);

  for (Vertex s = 1; s <= n; ++s) {
    auto extend = [&](auto&& self, Vertex u, Gain sum) -> void {
      if (path.size() >= 2) {
        for (std::size_t ei : pairs.between(u, s)) {
          if (path.size() == 2) {
            if (ei <= used.front()) continue;  // digon: each unordered edge pair once
          } else if (path[1] > u) {
            continue;  // only one traversal direction
          }
          if (sum + graph.edge(ei).gain_from(u) != 0) continue;
          BalancedCircle c{path, used};
          c.edges.push_back(ei);
          out.push_back(std::move(c));
        }
      }
      for (Vertex v = s + 1; v <= n; ++v) {
        if (on_path[v]) continue;
        for (std::size_t ei : pairs.between(u, v)) {
          path.push_back(v);
          used.push_back(ei);
          on_path[v] = true;
          self(self, v, sum + graph.edge(ei).gain_from(u));
          on_path[v] = false;
          used.pop_back();
          path.pop_back();
        }
      }
    };
    path = {s};
    on_path[s] = true;
    extend(extend, s, 0);
    on_path[s] = false;
  }
  return out;
}

EdgeOrder EdgeOrder::canonical(const GainGraph& graph) {
  std::vector<std::size_t> rank(graph.edge_count());
  std::iota(rank.begin(), rank.end(), 0);
  return EdgeOrder(std::move(rank));
}

EdgeOrder EdgeOrder::reversed(const GainGraph& graph) {
  std::vector<std::size_t> rank(graph.edge_count());
  for (std::size_t i = 0; i < rank.size(); ++i) rank[i] = rank.size() - 1 - i;
  return EdgeOrder(std::move(rank));
}

EdgeOrder EdgeOrder::from_height(const GainGraph& graph, const HeightFunction& h) {
  std::vector<std::size_t> seq(graph.edge_count());
  std::iota(seq.begin(), seq.end(), 0);
  std::stable_sort(seq.begin(), seq.end(), [&](std::size_t x, std::size_t y) {
    return compare_edges(h, graph.edge(x), graph.edge(y)) < 0;
  });
  return from_sequence(graph, seq);
}

EdgeOrder EdgeOrder::from_sequence(const GainGraph& graph, std::span<const std::size_t> sequence) {
  require(sequence.size() == graph.edge_count(), "edge order must list every edge");
  std::vector<std::size_t> rank(sequence.size(), sequence.size());
  for (std::size_t pos = 0; pos < sequence.size(); ++pos) {
    require(sequence[pos] < rank.size() && rank[sequence[pos]] == rank.size(),
            "edge order is not a permutation");
    rank[sequence[pos]] = pos;
  }
  return EdgeOrder(std::move(rank));
}

namespace {

// Broken circuits as edge-index bitmasks.
std::vector<std::uint64_t> broken_circuits(const GainGraph& graph, const EdgeOrder& order) {
  std::vector<std::uint64_t> out;
  for (const auto& c : enumerate_balanced_circles(graph)) {
    std::size_t smallest = c.edges.front();
    std::uint64_t m = 0;
    for (std::size_t e : c.edges) {
      m |= std::uint64_t{1} << e;
      if (order.less(e, smallest)) smallest = e;
    }
    out.push_back(m & ~(std::uint64_t{1} << smallest));
  }
  return out;
}

}  // namespace

bool is_nbc_bruteforce(std::span<const GainedEdge> forest, const GainGraph& graph,
                       const EdgeOrder& order) {
  require(order.size() == graph.edge_count(), "edge order belongs to another graph");
  guard_size(graph, 64);
  std::uint64_t chosen = 0;
  UnionFind uf(graph.vertex_count());
  for (const auto& e : forest) {
    auto idx = graph.index_of(e);
    require(idx.has_value(), "edge " + to_string(e) + " is not in the graph");
    require(uf.unite(e.lo, e.hi), "edge set is not a forest");
    chosen |= std::uint64_t{1} << *idx;
  }
  for (std::uint64_t bc : broken_circuits(graph, order))
    if ((chosen & bc) == bc) return false;
  return true;
}

NbcCount count_nbc_bruteforce(const GainGraph& graph, const EdgeOrder& order, int max_vertices) {
  require(order.size() == graph.edge_count(), "edge order belongs to another graph");
  guard_size(graph, max_vertices);
  const int n = graph.vertex_count();
  const std::size_t m = graph.edge_count();

  std::vector<std::vector<std::uint64_t>> by_edge(m);
  for (std::uint64_t bc : broken_circuits(graph, order))
    for (std::uint64_t rest = bc; rest != 0; rest &= rest - 1)
      by_edge[std::countr_zero(rest)].push_back(bc);

  std::vector<unsigned long long> tally(n, 0);
  std::vector<int> comp(n + 1);
  std::iota(comp.begin(), comp.end(), 0);

  auto walk = [&](auto&& self, std::size_t i, std::uint64_t chosen, int size) -> void {
    if (i == m) {
      ++tally[size];
      return;
    }
    self(self, i + 1, chosen, size);
    const auto& e = graph.edge(i);
    const int cl = comp[e.lo], ch = comp[e.hi];
    if (cl == ch) return;
    const std::uint64_t next = chosen | (std::uint64_t{1} << i);
    for (std::uint64_t bc : by_edge[i])
      if ((next & bc) == bc) return;
    const auto saved = comp;
    for (auto& c : comp)
      if (c == ch) c = cl;
    self(self, i + 1, next, size + 1);
    comp = saved;
  };
  walk(walk, 0, 0, 0);

  NbcCount out{0, {}};
  for (auto t : tally) {
    out.by_edges.emplace_back(t);
    out.total += t;
  }
  return out;
}

std::vector<std::vector<GainedEdge>> enumerate_forests(const GainGraph& graph, int max_vertices) {
  guard_size(graph, max_vertices);
  std::vector<std::vector<GainedEdge>> out;
  std::vector<GainedEdge> chosen;
  std::vector<int> comp(graph.vertex_count() + 1);
  std::iota(comp.begin(), comp.end(), 0);
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == graph.edge_count()) {
      out.push_back(chosen);
      return;
    }
    self(self, i + 1);
    const auto& e = graph.edge(i);
    const int cl = comp[e.lo], ch = comp[e.hi];
    if (cl == ch) return;
    const auto saved = comp;
    for (auto& c : comp)
      if (c == ch) c = cl;
    chosen.push_back(e);
    self(self, i + 1);
    chosen.pop_back();
    comp = saved;
  };
  walk(walk, 0);
  return out;
}

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

std::uint64_t prime_bound(const GainGraph& graph) {
  const auto m = static_cast<std::uint64_t>(std::max<Gain>(graph.max_abs_gain(), 1));
  return static_cast<std::uint64_t>(graph.vertex_count()) * m + 1;
}

std::vector<std::uint64_t> admissible_primes(const GainGraph& graph, std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = prime_bound(graph) + 1; out.size() < count; ++q)
    if (is_prime(q)) out.push_back(q);
  return out;
}

BigInt finite_field_count(const GainGraph& graph, std::uint64_t q, std::uint64_t max_points) {
  require(is_prime(q), std::to_string(q) + " is not prime");
  require(q > prime_bound(graph), "prime " + std::to_string(q) + " is below the admissibility bound " +
                                      std::to_string(prime_bound(graph) + 1));
  const int n = graph.vertex_count();
  BigInt space = 1;
  for (int i = 0; i < n; ++i) space *= q;
  if (space > max_points) {
    fail(ErrorKind::kGuard, "q^n = " + space.str() + " exceeds the point-count guard");
  }

  const auto qi = static_cast<std::int64_t>(q);
  // constraints[v] = (lo, forbidden residue of x_v - x_lo) for edges with hi = v.
  std::vector<std::vector<std::pair<Vertex, std::int64_t>>> constraints(n + 1);
  for (const auto& e : graph.edges())
    constraints[e.hi].emplace_back(e.lo, ((e.gain % qi) + qi) % qi);

  std::vector<std::int64_t> x(n + 1, 0);
  auto assign = [&](auto&& self, Vertex v) -> unsigned long long {
    if (v > n) return 1;
    unsigned long long total = 0;
    for (std::int64_t val = 0; val < qi; ++val) {
      bool ok = true;
      for (const auto& [lo, g] : constraints[v]) {
        if (((val - x[lo]) % qi + qi) % qi == g) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      x[v] = val;
      total += self(self, v + 1);
    }
    return total;
  };
  return BigInt(assign(assign, 1));
}

IntPolynomial charpoly_interpolated(const GainGraph& graph, std::span<const std::uint64_t> primes,
                                    std::uint64_t max_points) {
  const int n = graph.vertex_count();
  require(primes.size() >= static_cast<std::size_t>(n) + 1,
          "interpolation needs at least n+1 primes");
  std::vector<BigRational> xs, ys;
  for (std::uint64_t q : primes) {
    xs.emplace_back(q);
    ys.emplace_back(finite_field_count(graph, q, max_points));
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      require(xs[i] != xs[j], "interpolation primes must be distinct");

  // Lagrange form expanded into exact rational coefficients.
  std::vector<BigRational> coeffs(xs.size(), 0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<BigRational> basis{1};
    BigRational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      std::vector<BigRational> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += ys[i] * basis[k] / denom;
  }

  std::vector<BigInt> ints;
  for (const auto& c : coeffs) {
    if (boost::multiprecision::denominator(c) != 1) {
      fail(ErrorKind::kInternal, "interpolated characteristic polynomial is not integral");
    }
    ints.push_back(boost::multiprecision::numerator(c));
  }
  IntPolynomial chi(std::move(ints));
  if (chi.degree() > n) {
    fail(ErrorKind::kInternal, "point counts are inconsistent with a degree-n polynomial");
  }
  return chi;
}

BigInt regions_from_charpoly(const IntPolynomial& chi, int n) {
  require(chi.degree() == n, "characteristic polynomial degree must equal n");
  BigInt v = chi.evaluate(-1);
  return n % 2 == 0 ? v : BigInt(-v);
}

}  // namespace gainnbc::oracle
