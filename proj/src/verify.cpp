#include "gainnbc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "gainnbc/bijection.hpp"
#include "gainnbc/codec.hpp"
#include "gainnbc/error.hpp"
#include "gainnbc/nbc.hpp"
#include "gainnbc/polynomial.hpp"

namespace gainnbc {

using Json = nlohmann::json;

namespace {

struct Cell {
  int n;
  Gain a;
  Gain b;
};

std::vector<Cell> cells_of(const VerifyConfig& config) {
  std::vector<Cell> cells;
  for (const auto& [a, b] : config.grid)
    for (int n = 1; n <= config.max_n; ++n) cells.push_back({n, a, b});
  return cells;
}

std::vector<std::uint64_t> primes_for(const VerifyConfig& config, const GainGraph& graph) {
  if (!config.primes.empty()) return config.primes;
  return oracle::admissible_primes(graph, static_cast<std::size_t>(graph.vertex_count()) + 1);
}

Json run_cell(const Cell& cell, const VerifyConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const GainGraph graph = build_expansion({cell.n, cell.a, cell.b});
  const bool bijective = cell.a + cell.b == 0 || cell.a + cell.b == 1;

  Json out{{"n", cell.n}, {"a", cell.a}, {"b", cell.b}, {"bijective", bijective}};
  Json agree = Json::object();

  // NBC enumeration by height-function decomposition.
  const EdgeCountProfile profile = nbc_edge_profile(graph);
  const IntPolynomial poin = poincare(profile);
  const IntPolynomial chi_poin = charpoly_from_poincare(poin, cell.n);
  const std::size_t listed = enumerate_nbc_sets(graph).size();
  out["profile"] = codec::to_json(profile);
  out["poincare"] = codec::to_json(poin);
  agree["nbc_list_matches_profile"] = BigInt(listed) == profile.total();

  // Brute force under three orders: canonical, reversed, and an O_h-derived one.
  std::vector<Height> ramp(cell.n);
  for (int v = 1; v <= cell.n; ++v) ramp[v - 1] = (v * 7) % (cell.n + 1);
  const Height shift = *std::min_element(ramp.begin(), ramp.end());
  for (auto& h : ramp) h -= shift;
  const HeightFunction order_height = HeightFunction::on_all(ramp);
  const std::vector<oracle::EdgeOrder> orders{
      oracle::EdgeOrder::canonical(graph), oracle::EdgeOrder::reversed(graph),
      oracle::EdgeOrder::from_height(graph, order_height)};
  Json brute = Json::array();
  bool orders_agree = true, brute_profile = true;
  BigInt brute_total = -1;
  for (const auto& order : orders) {
    const auto count = oracle::count_nbc_bruteforce(graph, order, config.max_enum_n);
    brute.push_back(count.total.str());
    if (brute_total >= 0 && count.total != brute_total) orders_agree = false;
    brute_total = count.total;
    brute_profile = brute_profile && count.by_edges == profile.counts;
  }
  agree["bruteforce_order_invariant"] = orders_agree;
  agree["bruteforce_profile_matches_nbc"] = brute_profile;

  // Finite-field point counts.
  const auto primes = primes_for(config, graph);
  const IntPolynomial chi_ff = oracle::charpoly_interpolated(graph, primes, config.max_points);
  agree["interpolated_matches_poincare"] = chi_ff == chi_poin;

  Json regions{{"nbc", profile.total().str()},
               {"poincare_at_1", poin.evaluate(1).str()},
               {"bruteforce", brute},
               {"charpoly", oracle::regions_from_charpoly(chi_ff, cell.n).str()}};
  Json charpoly{{"from_poincare", codec::to_json(chi_poin)},
                {"interpolated", codec::to_json(chi_ff)},
                {"primes", primes}};

  if (bijective) {
    const BigInt formula = region_count(cell.n, cell.a, cell.b);
    const IntPolynomial full = charpoly_closed_form(cell.n, cell.a, cell.b, CharpolyForm::kFull);
    regions["formula"] = formula.str();
    charpoly["closed_form_full"] = codec::to_json(full);
    charpoly["closed_form_reduced"] =
        codec::to_json(charpoly_closed_form(cell.n, cell.a, cell.b, CharpolyForm::kReduced));
    agree["regions_formula_matches_nbc"] = formula == profile.total();
    agree["closed_form_matches_poincare"] = full == chi_poin;
    agree["closed_form_matches_interpolated"] = full == chi_ff;
    out["bijection"] = bijection_roundtrip_report(cell.n, cell.a, cell.b);
    agree["bijection_roundtrip"] = out["bijection"]["ok"];
  }
  agree["regions_nbc_matches_bruteforce"] = profile.total() == brute_total;
  agree["regions_nbc_matches_charpoly"] =
      profile.total() == oracle::regions_from_charpoly(chi_ff, cell.n);

  out["regions"] = regions;
  out["charpoly"] = charpoly;
  out["agree"] = agree;
  bool ok = true;
  for (const auto& [key, value] : agree.items()) ok = ok && value.get<bool>();
  out["ok"] = ok;
  if (config.timing) {
    out["seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return out;
}

}  // namespace

void check_verify_guards(const VerifyConfig& config) {
  require(config.max_n >= 1, "verify needs n >= 1");
  require(!config.grid.empty(), "verify needs a nonempty grid");
  require(config.max_enum_n >= 1 && config.max_points >= 1, "guards must be positive");
  for (const auto& [a, b] : config.grid) require(a <= b, "grid entries need a <= b");
  if (config.max_n > config.max_enum_n) {
    fail(ErrorKind::kGuard, "n = " + std::to_string(config.max_n) +
                                " exceeds the enumeration guard " + std::to_string(config.max_enum_n));
  }
  for (const auto& cell : cells_of(config)) {
    const GainGraph graph = build_expansion({cell.n, cell.a, cell.b});
    if (graph.edge_count() > 64) fail(ErrorKind::kGuard, "brute-force oracle limited to 64 edges");
    const auto primes = primes_for(config, graph);
    require(primes.size() >= static_cast<std::size_t>(cell.n) + 1,
            "interpolation needs at least n+1 primes");
    for (std::uint64_t q : primes) {
      require(oracle::is_prime(q) && q > oracle::prime_bound(graph),
              "prime " + std::to_string(q) + " is not admissible for (n,a,b) = (" +
                  std::to_string(cell.n) + "," + std::to_string(cell.a) + "," +
                  std::to_string(cell.b) + ")");
      BigInt space = 1;
      for (int i = 0; i < cell.n; ++i) space *= q;
      if (space > config.max_points) {
        fail(ErrorKind::kGuard, "q^n = " + space.str() + " exceeds the point-count guard");
      }
    }
  }
}

VerifyOutcome run_verification(const VerifyConfig& config) {
  check_verify_guards(config);
  const auto cells = cells_of(config);
  std::vector<Json> results(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());

  unsigned workers = config.threads ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(cells.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
      try {
        results[i] = run_cell(cells[i], config);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  pool.clear();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  VerifyOutcome outcome;
  outcome.all_agree = true;
  Json list = Json::array();
  for (auto& r : results) {
    outcome.all_agree = outcome.all_agree && r["ok"].get<bool>();
    list.push_back(std::move(r));
  }
  outcome.report = Json{{"cells", list}, {"ok", outcome.all_agree}};
  return outcome;
}

Json bijection_roundtrip_report(int n, Gain a, Gain b) {
  const GainGraph graph = build_expansion({n, a, b});
  const auto nbc_trees = enumerate_spanning_nbc_trees(graph);
  Json report{{"n", n}, {"a", a}, {"b", b}};
  report["nbc_trees"] = nbc_trees.size();
  report["formula"] = ab_tree_count(n, 1 - a, b).str();
  Json mismatch = nullptr;

  for (const auto& t : nbc_trees) {
    const ABTree enc = encode_tree(t, a, b);
    const NbcTree back = decode_tree(enc, a, b, n);
    if (back != t) {
      mismatch = Json{{"direction", "decode(encode(T))"}, {"input", codec::to_json(t)},
                      {"output", codec::to_json(back)}};
      break;
    }
  }

  std::vector<Vertex> all(n);
  for (int v = 1; v <= n; ++v) all[v - 1] = v;
  const auto ab_trees = enumerate_ab_trees(all, ABParams::from_gain_bounds(a, b));
  report["ab_trees"] = ab_trees.size();
  if (mismatch.is_null()) {
    for (const auto& t : ab_trees) {
      const ABTree again = encode_tree(decode_tree(t, a, b, n), a, b);
      if (again != t) {
        mismatch = Json{{"direction", "encode(decode(A))"}, {"input", codec::to_json(t)},
                        {"output", codec::to_json(again)}};
        break;
      }
    }
  }
  const bool counts = ab_trees.size() == nbc_trees.size() &&
                      BigInt(nbc_trees.size()) == ab_tree_count(n, 1 - a, b);
  report["counts_agree"] = counts;
  report["first_mismatch"] = mismatch;
  report["ok"] = counts && mismatch.is_null();
  return report;
}

}  // namespace gainnbc
