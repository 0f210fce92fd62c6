#include "gainnbc/gainnbc.h"

#include <string>

#include "gainnbc/bijection.hpp"
#include "gainnbc/codec.hpp"
#include "gainnbc/error.hpp"
#include "gainnbc/nbc.hpp"
#include "gainnbc/oracle.hpp"
#include "gainnbc/polynomial.hpp"
#include "gainnbc/verify.hpp"

struct gnbc_graph {
  gainnbc::GainGraph graph;
};

struct gnbc_string {
  std::string text;
};

namespace {

using gainnbc::ErrorKind;
using gainnbc::codec::Json;

thread_local std::string g_last_error;

gnbc_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return GNBC_ERR_INVALID_ARGUMENT;
    case ErrorKind::kOutOfScope: return GNBC_ERR_OUT_OF_SCOPE;
    case ErrorKind::kGuard: return GNBC_ERR_GUARD;
    case ErrorKind::kParse: return GNBC_ERR_PARSE;
    case ErrorKind::kInternal: return GNBC_ERR_INTERNAL;
  }
  return GNBC_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes and the thread-local message.
template <typename F>
gnbc_status guarded(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const gainnbc::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return GNBC_ERR_GUARD;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GNBC_ERR_INTERNAL;
  }
}

gnbc_status emit(std::string text, gnbc_string** out) {
  *out = new gnbc_string{std::move(text)};
  return GNBC_OK;
}

void require_out(const void* out) { gainnbc::require(out != nullptr, "null output pointer"); }

gainnbc::ExpansionParams params_of(const gnbc_params* p) {
  gainnbc::require(p != nullptr, "null params");
  gainnbc::ExpansionParams params{p->n, p->a, p->b};
  params.validate();
  return params;
}

int enum_limit(const gnbc_limits* limits) {
  return limits && limits->max_enum_n > 0 ? limits->max_enum_n : gainnbc::oracle::kDefaultMaxVertices;
}

std::uint64_t point_limit(const gnbc_limits* limits) {
  return limits && limits->max_points > 0 ? limits->max_points : gainnbc::oracle::kDefaultMaxPoints;
}

void guard_enumeration(int n, const gnbc_limits* limits) {
  if (n > enum_limit(limits)) {
    gainnbc::fail(ErrorKind::kGuard, "n = " + std::to_string(n) + " exceeds the enumeration guard " +
                                         std::to_string(enum_limit(limits)));
  }
}

std::vector<std::uint64_t> prime_list(const gainnbc::GainGraph& graph, const uint64_t* primes,
                                      size_t count) {
  if (primes == nullptr || count == 0) {
    return gainnbc::oracle::admissible_primes(graph, graph.vertex_count() + 1);
  }
  return {primes, primes + count};
}

gainnbc::IntPolynomial charpoly_by(const gainnbc::ExpansionParams& p, gnbc_method method,
                                   int reduced, const uint64_t* primes, size_t prime_count,
                                   const gnbc_limits* limits) {
  using namespace gainnbc;
  if (method == GNBC_METHOD_FORMULA) {
    return charpoly_closed_form(p.n, p.a, p.b,
                                reduced ? CharpolyForm::kReduced : CharpolyForm::kFull);
  }
  require(!reduced, "the reduced form is only available from the closed formula");
  const GainGraph graph = build_expansion(p);
  if (method == GNBC_METHOD_NBC) {
    guard_enumeration(p.n, limits);
    return charpoly_from_poincare(poincare(nbc_edge_profile(graph)), p.n);
  }
  require(method == GNBC_METHOD_CHARPOLY, "unknown method");
  return oracle::charpoly_interpolated(graph, prime_list(graph, primes, prime_count),
                                       point_limit(limits));
}

}  // namespace

extern "C" {

const char* gnbc_version(void) { return "1.0.0"; }

const char* gnbc_status_name(gnbc_status status) {
  switch (status) {
    case GNBC_OK: return "ok";
    case GNBC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GNBC_ERR_OUT_OF_SCOPE: return "out of scope";
    case GNBC_ERR_GUARD: return "guard violation";
    case GNBC_ERR_PARSE: return "parse error";
    case GNBC_ERR_VERIFICATION: return "verification failure";
    case GNBC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gnbc_last_error(void) { return g_last_error.c_str(); }

const char* gnbc_string_data(const gnbc_string* s) { return s ? s->text.c_str() : ""; }
size_t gnbc_string_size(const gnbc_string* s) { return s ? s->text.size() : 0; }
void gnbc_string_free(gnbc_string* s) { delete s; }

gnbc_status gnbc_params_preset(const char* name, int n, gnbc_params* out) {
  return guarded([&] {
    require_out(out);
    gainnbc::require(name != nullptr, "null preset name");
    auto p = gainnbc::ExpansionParams::preset(name, n);
    p.validate();
    *out = {p.n, p.a, p.b};
    return GNBC_OK;
  });
}

gnbc_status gnbc_graph_expansion(const gnbc_params* params, gnbc_graph** out) {
  return guarded([&] {
    require_out(out);
    *out = new gnbc_graph{gainnbc::build_expansion(params_of(params))};
    return GNBC_OK;
  });
}

gnbc_status gnbc_graph_parse(const char* text, gnbc_graph** out) {
  return guarded([&] {
    require_out(out);
    gainnbc::require(text != nullptr, "null text");
    *out = new gnbc_graph{gainnbc::codec::parse_gain_graph(text)};
    return GNBC_OK;
  });
}

void gnbc_graph_free(gnbc_graph* graph) { delete graph; }

int gnbc_graph_vertex_count(const gnbc_graph* graph) { return graph ? graph->graph.vertex_count() : 0; }

size_t gnbc_graph_edge_count(const gnbc_graph* graph) { return graph ? graph->graph.edge_count() : 0; }

gnbc_status gnbc_graph_format(const gnbc_graph* graph, gnbc_string** out) {
  return guarded([&] {
    require_out(out);
    gainnbc::require(graph != nullptr, "null graph");
    return emit(gainnbc::codec::format_gain_graph(graph->graph), out);
  });
}

gnbc_status gnbc_graph_nbc_profile(const gnbc_graph* graph, const gnbc_limits* limits,
                                   gnbc_string** out) {
  return guarded([&] {
    require_out(out);
    gainnbc::require(graph != nullptr, "null graph");
    guard_enumeration(graph->graph.vertex_count(), limits);
    return emit(gainnbc::codec::to_json(gainnbc::nbc_edge_profile(graph->graph)).dump(), out);
  });
}

gnbc_status gnbc_graph_charpoly(const gnbc_graph* graph, const uint64_t* primes, size_t prime_count,
                                const gnbc_limits* limits, gnbc_string** out) {
  return guarded([&] {
    require_out(out);
    gainnbc::require(graph != nullptr, "null graph");
    auto chi = gainnbc::oracle::charpoly_interpolated(
        graph->graph, prime_list(graph->graph, primes, prime_count), point_limit(limits));
    return emit(gainnbc::codec::to_json(chi).dump(), out);
  });
}

gnbc_status gnbc_region_count(const gnbc_params* params, gnbc_method method,
                              const gnbc_limits* limits, gnbc_string** out) {
  return guarded([&] {
    using namespace gainnbc;
    require_out(out);
    const auto p = params_of(params);
    switch (method) {
      case GNBC_METHOD_FORMULA:
        return emit(region_count(p.n, p.a, p.b).str(), out);
      case GNBC_METHOD_NBC:
        guard_enumeration(p.n, limits);
        return emit(nbc_edge_profile(build_expansion(p)).total().str(), out);
      case GNBC_METHOD_CHARPOLY: {
        auto chi = charpoly_by(p, method, 0, nullptr, 0, limits);
        return emit(oracle::regions_from_charpoly(chi, p.n).str(), out);
      }
    }
    fail(ErrorKind::kInvalidArgument, "unknown method");
  });
}

gnbc_status gnbc_charpoly(const gnbc_params* params, gnbc_method method, int reduced,
                          const uint64_t* primes, size_t prime_count, const gnbc_limits* limits,
                          gnbc_string** out) {
  return guarded([&] {
    require_out(out);
    auto chi = charpoly_by(params_of(params), method, reduced, primes, prime_count, limits);
    return emit(gainnbc::codec::to_json(chi).dump(), out);
  });
}

gnbc_status gnbc_poincare(const gnbc_params* params, const gnbc_limits* limits, gnbc_string** out) {
  return guarded([&] {
    using namespace gainnbc;
    require_out(out);
    const auto p = params_of(params);
    guard_enumeration(p.n, limits);
    return emit(codec::to_json(poincare(nbc_edge_profile(build_expansion(p)))).dump(), out);
  });
}

gnbc_status gnbc_nbc_forests(const gnbc_params* params, const gnbc_limits* limits,
                             gnbc_string** out) {
  return guarded([&] {
    using namespace gainnbc;
    require_out(out);
    const auto p = params_of(params);
    guard_enumeration(p.n, limits);
    Json arr = Json::array();
    for (const auto& f : enumerate_nbc_sets(build_expansion(p))) arr.push_back(codec::to_json(f));
    return emit(arr.dump(), out);
  });
}

gnbc_status gnbc_nbc_profile(const gnbc_params* params, const gnbc_limits* limits,
                             gnbc_string** out) {
  return guarded([&] {
    using namespace gainnbc;
    require_out(out);
    const auto p = params_of(params);
    guard_enumeration(p.n, limits);
    return emit(codec::to_json(nbc_edge_profile(build_expansion(p))).dump(), out);
  });
}

gnbc_status gnbc_encode(const gnbc_params* params, const char* json, gnbc_string** out) {
  return guarded([&] {
    using namespace gainnbc;
    require_out(out);
    require(json != nullptr, "null input");
    const auto p = params_of(params);
    const GainGraph graph = build_expansion(p);
    const Json in = codec::parse_json(json);
    if (in.is_array()) {
      return emit(codec::to_json(encode_forest(codec::nbc_forest_from_json(in, graph), p.a, p.b)).dump(),
                  out);
    }
    return emit(codec::to_json(encode_tree(codec::nbc_tree_from_json(in, graph), p.a, p.b)).dump(), out);
  });
}

gnbc_status gnbc_decode(const gnbc_params* params, const char* json, gnbc_string** out) {
  return guarded([&] {
    using namespace gainnbc;
    require_out(out);
    require(json != nullptr, "null input");
    const auto p = params_of(params);
    const Json in = codec::parse_json(json);
    if (in.is_array()) {
      return emit(
          codec::to_json(decode_forest(codec::ab_forest_from_json(in), p.n, p.a, p.b)).dump(), out);
    }
    return emit(codec::to_json(decode_tree(codec::ab_tree_from_json(in), p.a, p.b, p.n)).dump(), out);
  });
}

gnbc_status gnbc_roundtrip(const gnbc_params* params, const char* json, const gnbc_limits* limits,
                           gnbc_string** out) {
  return guarded([&] {
    using namespace gainnbc;
    require_out(out);
    const auto p = params_of(params);
    Json report;
    if (json == nullptr) {
      guard_enumeration(p.n, limits);
      report = bijection_roundtrip_report(p.n, p.a, p.b);
    } else {
      const GainGraph graph = build_expansion(p);
      const Json in = codec::parse_json(json);
      Json back;
      if (in.is_array()) {
        auto forest = codec::nbc_forest_from_json(in, graph);
        auto again = decode_forest(encode_forest(forest, p.a, p.b), p.n, p.a, p.b);
        back = codec::to_json(again);
        report["ok"] = again == forest;
      } else {
        auto tree = codec::nbc_tree_from_json(in, graph);
        auto again = decode_tree(encode_tree(tree, p.a, p.b), p.a, p.b, p.n);
        back = codec::to_json(again);
        report["ok"] = again == tree;
      }
      report["first_mismatch"] =
          report["ok"].get<bool>() ? Json(nullptr) : Json{{"input", in}, {"output", back}};
    }
    const bool ok = report["ok"].get<bool>();
    emit(report.dump(), out);
    return ok ? GNBC_OK : GNBC_ERR_VERIFICATION;
  });
}

gnbc_status gnbc_correspondence(const gnbc_params* params, const char* json, gnbc_string** out) {
  return guarded([&] {
    using namespace gainnbc;
    require_out(out);
    require(json != nullptr, "null input");
    const auto p = params_of(params);
    const auto forest = codec::nbc_forest_from_json(codec::parse_json(json), build_expansion(p));
    const RootedTree t = p.a == 0 && p.b == 0 ? braid_correspondence(forest, p.a, p.b)
                                              : shi_correspondence(forest, p.a, p.b);
    return emit(codec::to_json(t).dump(), out);
  });
}

gnbc_status gnbc_verify(const gnbc_verify_config* config, gnbc_string** out) {
  return guarded([&] {
    using namespace gainnbc;
    require_out(out);
    require(config != nullptr, "null config");
    VerifyConfig cfg;
    cfg.max_n = config->max_n;
    if (config->grid_len > 0) {
      require(config->grid_a && config->grid_b, "null grid");
      cfg.grid.clear();
      for (size_t i = 0; i < config->grid_len; ++i) cfg.grid.emplace_back(config->grid_a[i], config->grid_b[i]);
    }
    if (config->primes && config->prime_count)
      cfg.primes.assign(config->primes, config->primes + config->prime_count);
    cfg.max_enum_n = enum_limit(&config->limits);
    cfg.max_points = point_limit(&config->limits);
    cfg.threads = config->threads;
    cfg.timing = config->timing != 0;
    auto outcome = run_verification(cfg);
    emit(outcome.report.dump(2) + "\n", out);
    return outcome.all_agree ? GNBC_OK : GNBC_ERR_VERIFICATION;
  });
}

}  // extern "C"
