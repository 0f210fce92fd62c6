// gainnbc command-line front end. Talks to the library only through gainnbc.h.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gainnbc/gainnbc.h"

using Json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitInternal = 4;

int exit_code(gnbc_status s) {
  switch (s) {
    case GNBC_OK: return kExitOk;
    case GNBC_ERR_VERIFICATION: return kExitVerification;
    case GNBC_ERR_GUARD: return kExitGuard;
    case GNBC_ERR_INVALID_ARGUMENT:
    case GNBC_ERR_OUT_OF_SCOPE:
    case GNBC_ERR_PARSE: return kExitUsage;
    case GNBC_ERR_INTERNAL: return kExitInternal;
  }
  return kExitInternal;
}

// Carries a library status out of a command body.
struct Failure {
  gnbc_status status;
  std::string message;
};

struct StringDeleter {
  void operator()(gnbc_string* s) const { gnbc_string_free(s); }
};
using Owned = std::unique_ptr<gnbc_string, StringDeleter>;

std::string text_of(const Owned& s) { return std::string(gnbc_string_data(s.get()), gnbc_string_size(s.get())); }

// Calls a C API function that fills a gnbc_string. VERIFICATION keeps its payload.
template <typename F>
std::pair<gnbc_status, std::string> call(F&& f) {
  gnbc_string* raw = nullptr;
  gnbc_status st = f(&raw);
  Owned out(raw);
  if (st != GNBC_OK && st != GNBC_ERR_VERIFICATION) throw Failure{st, gnbc_last_error()};
  return {st, out ? text_of(out) : std::string()};
}

std::string read_stdin() {
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.find_first_not_of(" ") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (item.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--primes", "not a comma-separated list of integers: " + text);
    }
  }
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_grid(const std::string& text) {
  static const std::regex pair_re(R"(\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*(,|$))");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  auto it = text.cbegin();
  std::smatch m;
  while (it != text.cend() && std::regex_search(it, text.cend(), m, pair_re, std::regex_constants::match_continuous)) {
    out.emplace_back(std::stoll(m[1]), std::stoll(m[2]));
    it = m[0].second;
  }
  if (it != text.cend() || out.empty())
    throw CLI::ValidationError("--grid", "expected pairs like \"(0,0),(0,1)\": " + text);
  return out;
}

struct Options {
  int n = 0;
  std::optional<std::int64_t> a, b;
  std::string preset;
  std::string format = "plain";
  std::string primes;
  std::string method = "formula";
  int max_n = 0;
  std::uint64_t max_points = 0;
  std::string out;
  bool cross_check = false;
  bool all = false;
  bool timing = false;
  unsigned threads = 0;
  std::string grid;
};

gnbc_params params_of(const Options& o) {
  gnbc_params p{o.n, 0, 0};
  if (!o.preset.empty()) {
    gnbc_status st = gnbc_params_preset(o.preset.c_str(), o.n, &p);
    if (st != GNBC_OK) throw Failure{st, gnbc_last_error()};
    return p;
  }
  if (o.a.has_value() != o.b.has_value()) throw Failure{GNBC_ERR_INVALID_ARGUMENT, "give both -a and -b"};
  p.a = o.a.value_or(0);
  p.b = o.b.value_or(0);
  return p;
}

gnbc_limits limits_of(const Options& o) { return {o.max_n, o.max_points}; }

gnbc_method method_of(const std::string& m) {
  if (m == "nbc") return GNBC_METHOD_NBC;
  if (m == "charpoly") return GNBC_METHOD_CHARPOLY;
  return GNBC_METHOD_FORMULA;
}

bool in_scope(const gnbc_params& p) { return p.a + p.b == 0 || p.a + p.b == 1; }

std::string poly_plain(const Json& coeffs) {
  // ascending decimal strings -> "q^3 - 6q^2 + 9q"
  std::string out;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    std::string c = coeffs[k].get<std::string>();
    if (c == "0") continue;
    const bool neg = c.front() == '-';
    if (neg) c.erase(0, 1);
    if (out.empty()) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    if (c != "1" || k == 0) out += c;
    if (k >= 1) out += "q";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::string poly_csv(const Json& coeffs) {
  std::string out = "power,coefficient\n";
  for (std::size_t k = 0; k < coeffs.size(); ++k) out += std::to_string(k) + "," + coeffs[k].get<std::string>() + "\n";
  return out;
}

Json cell_json(const gnbc_params& p) { return Json{{"n", p.n}, {"a", p.a}, {"b", p.b}}; }

struct Result {
  std::string text;
  int code = kExitOk;
};

Result run_regions(const Options& o) {
  const gnbc_params p = params_of(o);
  const gnbc_limits lim = limits_of(o);
  std::vector<std::string> methods;
  if (o.cross_check) {
    if (in_scope(p)) methods.push_back("formula");
    methods.insert(methods.end(), {"nbc", "charpoly"});
  } else {
    methods.push_back(o.method);
  }
  Json counts = Json::object();
  for (const auto& m : methods) {
    counts[m] = call([&](gnbc_string** s) { return gnbc_region_count(&p, method_of(m), &lim, s); }).second;
  }
  bool agree = true;
  for (const auto& [m, v] : counts.items()) agree = agree && v == counts[methods.front()];
  Result r;
  r.code = agree ? kExitOk : kExitVerification;
  if (o.format == "json") {
    Json j = cell_json(p);
    j["regions"] = counts;
    if (o.cross_check) j["agree"] = agree;
    r.text = j.dump(2) + "\n";
  } else if (o.format == "csv") {
    r.text = "n,a,b,method,regions\n";
    for (const auto& m : methods)
      r.text += std::to_string(p.n) + "," + std::to_string(p.a) + "," + std::to_string(p.b) + "," + m + "," +
                counts[m].get<std::string>() + "\n";
  } else if (!o.cross_check) {
    r.text = counts[methods.front()].get<std::string>() + "\n";
  } else {
    for (const auto& m : methods) r.text += m + " " + counts[m].get<std::string>() + "\n";
    r.text += agree ? "agree\n" : "DISAGREE\n";
  }
  return r;
}

Result run_charpoly(const Options& o) {
  const gnbc_params p = params_of(o);
  const gnbc_limits lim = limits_of(o);
  const auto primes = parse_primes(o.primes);
  const gnbc_method method = method_of(o.method);
  auto get = [&](int reduced) {
    return Json::parse(call([&](gnbc_string** s) {
                         return gnbc_charpoly(&p, method, reduced, primes.data(), primes.size(), &lim, s);
                       }).second);
  };
  const Json full = get(0);
  const Json reduced = method == GNBC_METHOD_FORMULA ? get(1) : Json(nullptr);
  Result r;
  if (o.format == "json") {
    Json j = cell_json(p);
    j["method"] = o.method;
    j["full"] = full;
    j["reduced"] = reduced;
    r.text = j.dump(2) + "\n";
  } else if (o.format == "csv") {
    r.text = poly_csv(full);
  } else {
    r.text = "full:    " + poly_plain(full) + "\n";
    if (!reduced.is_null()) r.text += "reduced: " + poly_plain(reduced) + "\n";
  }
  return r;
}

Result run_poincare(const Options& o) {
  const gnbc_params p = params_of(o);
  const gnbc_limits lim = limits_of(o);
  const Json poin = Json::parse(call([&](gnbc_string** s) { return gnbc_poincare(&p, &lim, s); }).second);
  Result r;
  if (o.format == "json") {
    Json j = cell_json(p);
    j["poincare"] = poin;
    r.text = j.dump(2) + "\n";
  } else if (o.format == "csv") {
    r.text = poly_csv(poin);
  } else {
    r.text = poly_plain(poin) + "\n";
  }
  return r;
}

Result run_nbc_list(const Options& o) {
  const gnbc_params p = params_of(o);
  const gnbc_limits lim = limits_of(o);
  const Json forests = Json::parse(call([&](gnbc_string** s) { return gnbc_nbc_forests(&p, &lim, s); }).second);
  Result r;
  if (o.format == "json") {
    r.text = forests.dump(2) + "\n";
  } else if (o.format == "csv") {
    r.text = "forest,component,edges\n";
    for (std::size_t i = 0; i < forests.size(); ++i)
      for (std::size_t c = 0; c < forests[i].size(); ++c) {
        std::string edges;
        for (const auto& e : forests[i][c]["edges"]) edges += (edges.empty() ? "" : " ") + e.get<std::string>();
        r.text += std::to_string(i) + "," + std::to_string(c) + ",\"" + edges + "\"\n";
      }
  } else {
    for (const auto& f : forests) {
      std::string line;
      for (const auto& t : f) {
        std::string edges;
        for (const auto& e : t["edges"]) edges += (edges.empty() ? "" : " ") + e.get<std::string>();
        if (edges.empty()) {
          for (std::size_t v = 0; v < t["heights"].size(); ++v)
            if (!t["heights"][v].is_null()) edges = "{" + std::to_string(v + 1) + "}";
        }
        line += (line.empty() ? "" : " | ") + edges;
      }
      r.text += line + "\n";
    }
    r.text += std::to_string(forests.size()) + " forests\n";
  }
  return r;
}

Result run_nbc_profile(const Options& o) {
  const gnbc_params p = params_of(o);
  const gnbc_limits lim = limits_of(o);
  const Json prof = Json::parse(call([&](gnbc_string** s) { return gnbc_nbc_profile(&p, &lim, s); }).second);
  Result r;
  if (o.format == "json") {
    Json j = cell_json(p);
    j["profile"] = prof;
    r.text = j.dump(2) + "\n";
  } else {
    r.text = o.format == "csv" ? "edges,count\n" : "";
    const char* sep = o.format == "csv" ? "," : " ";
    for (std::size_t j = 0; j < prof.size(); ++j)
      r.text += std::to_string(j) + sep + prof[std::to_string(j)].get<std::string>() + "\n";
  }
  return r;
}

// Bijection payloads are JSON whatever the format; plain pretty-prints them.
std::string render_json(const Options& o, const std::string& raw) {
  const Json j = Json::parse(raw);
  return (o.format == "plain" ? j.dump(2) : j.dump()) + "\n";
}

Result run_encode(const Options& o) {
  const gnbc_params p = params_of(o);
  const std::string in = read_stdin();
  return {render_json(o, call([&](gnbc_string** s) { return gnbc_encode(&p, in.c_str(), s); }).second)};
}

Result run_decode(const Options& o) {
  const gnbc_params p = params_of(o);
  const std::string in = read_stdin();
  return {render_json(o, call([&](gnbc_string** s) { return gnbc_decode(&p, in.c_str(), s); }).second)};
}

Result run_roundtrip(const Options& o) {
  const gnbc_params p = params_of(o);
  const gnbc_limits lim = limits_of(o);
  std::string in;
  if (!o.all) in = read_stdin();
  auto [st, text] = call([&](gnbc_string** s) {
    return gnbc_roundtrip(&p, o.all ? nullptr : in.c_str(), &lim, s);
  });
  return {render_json(o, text), exit_code(st)};
}

Result run_correspondence(const Options& o) {
  const gnbc_params p = params_of(o);
  const std::string in = read_stdin();
  return {render_json(o, call([&](gnbc_string** s) { return gnbc_correspondence(&p, in.c_str(), s); }).second)};
}

Result run_verify(const Options& o) {
  gnbc_verify_config cfg{};
  cfg.max_n = o.n;
  std::vector<std::int64_t> ga, gb;
  if (!o.grid.empty()) {
    for (auto [a, b] : parse_grid(o.grid)) {
      ga.push_back(a);
      gb.push_back(b);
    }
  }
  cfg.grid_a = ga.data();
  cfg.grid_b = gb.data();
  cfg.grid_len = ga.size();
  const auto primes = parse_primes(o.primes);
  cfg.primes = primes.data();
  cfg.prime_count = primes.size();
  cfg.limits = limits_of(o);
  cfg.threads = o.threads;
  cfg.timing = o.timing;
  auto [st, text] = call([&](gnbc_string** s) { return gnbc_verify(&cfg, s); });
  Result r{text, exit_code(st)};
  if (o.format != "json") {
    const Json report = Json::parse(text);
    r.text = o.format == "csv" ? "n,a,b,regions,ok\n" : "";
    for (const auto& c : report["cells"]) {
      const std::string n = std::to_string(c["n"].get<int>()), a = std::to_string(c["a"].get<long long>()),
                        b = std::to_string(c["b"].get<long long>());
      const std::string regions = c["regions"]["nbc"].get<std::string>();
      const bool ok = c["ok"].get<bool>();
      if (o.format == "csv") {
        r.text += n + "," + a + "," + b + "," + regions + "," + (ok ? "true" : "false") + "\n";
      } else {
        r.text += "n=" + n + " a=" + a + " b=" + b + " regions=" + regions + (ok ? " ok" : " MISMATCH");
        if (!ok)
          for (const auto& [k, v] : c["agree"].items())
            if (!v.get<bool>()) r.text += " " + k;
        r.text += "\n";
      }
    }
    if (o.format == "plain") r.text += report["ok"].get<bool>() ? "all checks agree\n" : "verification FAILED\n";
  }
  return r;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Failure{GNBC_ERR_INVALID_ARGUMENT, "cannot write " + o.out};
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NBC sets, region counts and characteristic polynomials of gain-graph expansions K_n^{ab}"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gnbc_version()));
  Options o;
  std::function<Result(const Options&)> action;

  auto instance = [&](CLI::App* sub, bool need_n = true) {
    auto* n = sub->add_option("-n", o.n, "number of vertices")->check(CLI::PositiveNumber);
    if (need_n) n->required();
    auto* a = sub->add_option("-a", o.a, "smallest gain");
    auto* b = sub->add_option("-b", o.b, "largest gain");
    auto* preset = sub->add_option("--preset", o.preset, "braid, shi, catalan or linial")
                       ->check(CLI::IsMember({"braid", "shi", "catalan", "linial"}));
    preset->excludes(a)->excludes(b);
  };
  auto output = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "plain, json or csv")->check(CLI::IsMember({"plain", "json", "csv"}));
    sub->add_option("--out", o.out, "write to this file instead of stdout");
  };
  auto guards = [&](CLI::App* sub) {
    sub->add_option("--max-n", o.max_n, "enumeration guard on n (default 6)")->check(CLI::PositiveNumber);
    sub->add_option("--max-points", o.max_points, "point-count guard on q^n (default 1e7)")
        ->check(CLI::PositiveNumber);
  };
  auto methods = CLI::IsMember({"formula", "nbc", "charpoly"});

  auto* regions = app.add_subcommand("regions", "number of regions of the arrangement");
  instance(regions);
  output(regions);
  guards(regions);
  regions->add_option("--method", o.method, "formula, nbc or charpoly")->check(methods);
  regions->add_flag("--cross-check", o.cross_check, "run every applicable method and compare");
  regions->callback([&] { action = run_regions; });

  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial, full and reduced");
  instance(charpoly);
  output(charpoly);
  guards(charpoly);
  charpoly->add_option("--method", o.method, "formula, nbc or charpoly")->check(methods);
  charpoly->add_option("--primes", o.primes, "comma-separated primes for the charpoly method");
  charpoly->callback([&] { action = run_charpoly; });

  auto* poin = app.add_subcommand("poincare", "Poincare polynomial from NBC enumeration");
  instance(poin);
  output(poin);
  guards(poin);
  poin->callback([&] { action = run_poincare; });

  auto* nbc = app.add_subcommand("nbc", "NBC forests");
  nbc->require_subcommand(1);
  auto* list = nbc->add_subcommand("list", "every NBC forest");
  auto* profile = nbc->add_subcommand("profile", "NBC forests counted by number of edges");
  for (auto* sub : {list, profile}) {
    instance(sub);
    output(sub);
    guards(sub);
  }
  list->callback([&] { action = run_nbc_list; });
  profile->callback([&] { action = run_nbc_profile; });

  auto* bij = app.add_subcommand("bijection", "NBC trees <-> (1-a,b)-trees; JSON on stdin");
  bij->require_subcommand(1);
  auto* encode = bij->add_subcommand("encode", "NBC tree or forest to weighted rooted tree(s)");
  auto* decode = bij->add_subcommand("decode", "weighted rooted tree(s) to NBC tree or forest");
  auto* round = bij->add_subcommand("roundtrip", "decode(encode(x)) == x on stdin input, or on all trees");
  auto* corr = bij->add_subcommand("correspondence", "braid/Shi forest to a tree on n+1 vertices");
  for (auto* sub : {encode, decode, round, corr}) {
    instance(sub);
    output(sub);
  }
  guards(round);
  round->add_flag("--all", o.all, "check every NBC tree and every (1-a,b)-tree on [n]");
  encode->callback([&] { action = run_encode; });
  decode->callback([&] { action = run_decode; });
  round->callback([&] { action = run_roundtrip; });
  corr->callback([&] { action = run_correspondence; });

  auto* verify = app.add_subcommand("verify", "cross-check every method over a parameter grid, n' = 1..n");
  verify->add_option("-n", o.n, "largest n")->required()->check(CLI::PositiveNumber);
  verify->add_option("--grid", o.grid, "(a,b) pairs, e.g. \"(0,0),(0,1),(-1,1)\"; default braid, Shi, Catalan, Linial");
  verify->add_option("--primes", o.primes, "comma-separated primes (default: admissible per cell)");
  verify->add_option("--threads", o.threads, "worker threads (default: all cores)");
  verify->add_flag("--timing", o.timing, "add wall-clock seconds per cell (report no longer reproducible)");
  output(verify);
  guards(verify);
  verify->callback([&] { action = run_verify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    Result r = action(o);
    emit(o, r.text);
    return r.code;
  } catch (const Failure& f) {
    std::cerr << "gainnbc: " << gnbc_status_name(f.status) << ": " << f.message << "\n";
    return exit_code(f.status);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "gainnbc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "gainnbc: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
