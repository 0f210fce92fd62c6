#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gainnbc/gain_graph.hpp"
#include "gainnbc/oracle.hpp"

namespace gainnbc {

struct VerifyConfig {
  int max_n = 3;  // cells run for n = 1..max_n
  std::vector<std::pair<Gain, Gain>> grid{{0, 0}, {0, 1}, {-1, 1}, {1, 1}};
  std::vector<std::uint64_t> primes;  // empty: the n+1 smallest admissible primes per cell
  int max_enum_n = oracle::kDefaultMaxVertices;
  std::uint64_t max_points = oracle::kDefaultMaxPoints;
  unsigned threads = 0;  // 0: hardware concurrency
  bool timing = false;   // wall-clock fields make reports non-reproducible
};

struct VerifyOutcome {
  nlohmann::json report;
  bool all_agree = false;
};

/// Throws ErrorKind::kGuard before doing any work if a cell exceeds a guard.
void check_verify_guards(const VerifyConfig& config);

/// Cross-checks every (n,a,b) cell: closed forms, NBC enumeration, brute-force NBC
/// counts under three edge orders, finite-field interpolation, and (a+b in {0,1}) the
/// tree bijection. Cells run concurrently; the report order is fixed.
VerifyOutcome run_verification(const VerifyConfig& config);

/// Checks decode(encode(T)) = T over every NBC tree of K_n^{ab} and encode(decode(A)) = A
/// over every (1-a,b)-tree on [n]. Returns a report with the first mismatch, if any.
nlohmann::json bijection_roundtrip_report(int n, Gain a, Gain b);

}  // namespace gainnbc
