#include "braidnorm.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "braidnorm/braid.hpp"
#include "braidnorm/hofer.hpp"
#include "braidnorm/json_io.hpp"
#include "braidnorm/link_params.hpp"
#include "braidnorm/sym_product.hpp"

using nlohmann::ordered_json;

extern "C" {

struct bn_params {
  braidnorm::LinkParams rep;
};

struct bn_word {
  braidnorm::BraidWord rep;
};

struct bn_homotopy {
  braidnorm::Homotopy rep;
};

}  // extern "C"

namespace {

thread_local std::string g_last_error = "no error";

template <typename Fn>
bn_status guarded(Fn&& fn) {
  try {
    fn();
    return BN_OK;
  } catch (const braidnorm::ParseError& e) {
    g_last_error = e.what();
    return BN_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return BN_ERR_INVALID_ARGUMENT;
  } catch (const std::logic_error& e) {
    g_last_error = e.what();
    return BN_ERR_INTERNAL;
  } catch (const std::runtime_error& e) {
    g_last_error = e.what();
    return BN_ERR_NUMERIC;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BN_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return BN_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bn_status require(bool cond, const char* message) {
  if (cond) return BN_OK;
  g_last_error = message;
  return BN_ERR_INVALID_ARGUMENT;
}

braidnorm::WeightPair parse_pair(const braidnorm::LinkParams& params,
                                 const char* v1, const char* v2) {
  braidnorm::WeightPair pair{
      braidnorm::weight_vector_from_csv(v1, params.p),
      braidnorm::weight_vector_from_csv(v2, params.p)};
  validate(params, pair);
  return pair;
}

ordered_json summary_json(const braidnorm::ExponentSummary& summary) {
  return {{"k_gen", summary.k_gen}, {"k_sigma", summary.k_sigma}, {"k", summary.k}};
}

ordered_json weights_json(const braidnorm::WeightVector& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& x : v.s) arr.push_back(braidnorm::to_string(x));
  return arr;
}

}  // namespace

extern "C" {

const char* bn_last_error(void) { return g_last_error.c_str(); }

void bn_string_free(char* s) { std::free(s); }

bn_status bn_params_new(long k, long g, long p, const char* lambda,
                        const char* area, bn_params** out) {
  if (bn_status st = require(out != nullptr && lambda != nullptr,
                             "lambda and out must not be NULL"))
    return st;
  return guarded([&] {
    braidnorm::LinkParams params;
    params.k = k;
    params.g = g;
    params.p = p;
    params.lambda = braidnorm::parse_rational(lambda);
    if (area != nullptr) params.ambient_area = braidnorm::parse_rational(area);
    braidnorm::validate(params);
    *out = new bn_params{std::move(params)};
  });
}

bn_status bn_params_from_json(const char* text, bn_params** out) {
  if (bn_status st = require(out != nullptr && text != nullptr,
                             "text and out must not be NULL"))
    return st;
  return guarded([&] { *out = new bn_params{braidnorm::params_from_json(text)}; });
}

void bn_params_free(bn_params* params) { delete params; }

bn_status bn_params_s_max(const bn_params* params, char** out) {
  if (bn_status st = require(params != nullptr && out != nullptr,
                             "params and out must not be NULL"))
    return st;
  return guarded([&] { *out = copy_string(braidnorm::to_string(s_max(params->rep))); });
}

bn_status bn_params_eta(const bn_params* params, const char* extra_area,
                        char** out) {
  if (bn_status st = require(params != nullptr && out != nullptr,
                             "params and out must not be NULL"))
    return st;
  return guarded([&] {
    braidnorm::Rational extra = 0;
    if (extra_area != nullptr) extra = braidnorm::parse_rational(extra_area);
    *out = copy_string(braidnorm::to_string(eta(params->rep, extra)));
  });
}

bn_status bn_word_parse(const char* text, long n_strands, long genus,
                        long punctures, int mode, bn_word** out) {
  if (bn_status st = require(text != nullptr && out != nullptr,
                             "text and out must not be NULL"))
    return st;
  if (bn_status st = require(mode == BN_MODE_RESTRICTED || mode == BN_MODE_FULL,
                             "mode must be BN_MODE_RESTRICTED or BN_MODE_FULL"))
    return st;
  if (bn_status st = require(n_strands >= 0 && n_strands <= 1'000'000 &&
                                 genus >= 0 && genus <= 1'000'000 &&
                                 punctures >= 0 && punctures <= 1'000'000,
                             "signature fields out of range"))
    return st;
  return guarded([&] {
    braidnorm::GroupSignature sig{static_cast<int>(n_strands),
                                  static_cast<int>(genus),
                                  static_cast<int>(punctures)};
    const auto m = mode == BN_MODE_RESTRICTED ? braidnorm::AlphabetMode::Restricted
                                              : braidnorm::AlphabetMode::Full;
    *out = new bn_word{braidnorm::parse_word(text, sig, m)};
  });
}

void bn_word_free(bn_word* word) { delete word; }

bn_status bn_word_format(const bn_word* word, char** out) {
  if (bn_status st = require(word != nullptr && out != nullptr,
                             "word and out must not be NULL"))
    return st;
  return guarded([&] { *out = copy_string(format_word(word->rep)); });
}

bn_status bn_word_free_reduce(const bn_word* word, bn_word** out) {
  if (bn_status st = require(word != nullptr && out != nullptr,
                             "word and out must not be NULL"))
    return st;
  return guarded([&] { *out = new bn_word{free_reduce(word->rep)}; });
}

bn_status bn_word_expand(const bn_word* word, bn_word** out) {
  if (bn_status st = require(word != nullptr && out != nullptr,
                             "word and out must not be NULL"))
    return st;
  return guarded([&] { *out = new bn_word{expand_restricted(word->rep)}; });
}

bn_status bn_word_linking_number(const bn_word* word, long long* out) {
  if (bn_status st = require(word != nullptr && out != nullptr,
                             "word and out must not be NULL"))
    return st;
  return guarded([&] { *out = linking_number(word->rep); });
}

bn_status bn_word_summary_json(const bn_word* word, char** out) {
  if (bn_status st = require(word != nullptr && out != nullptr,
                             "word and out must not be NULL"))
    return st;
  return guarded([&] {
    *out = copy_string(summary_json(exponent_summary(word->rep)).dump());
  });
}

bn_status bn_z_last_word(long k, long g, long p, bn_word** out) {
  if (bn_status st = require(out != nullptr, "out must not be NULL")) return st;
  if (bn_status st = require(k >= 0 && k <= 1'000'000 && g >= 0 &&
                                 g <= 1'000'000 && p >= 0 && p <= 1'000'000,
                             "signature fields out of range"))
    return st;
  return guarded([&] {
    braidnorm::GroupSignature sig{static_cast<int>(k + g), static_cast<int>(g),
                                  static_cast<int>(p)};
    *out = new bn_word{z_last_word(sig)};
  });
}

bn_status bn_f_value(const bn_params* params, const bn_word* word,
                     const char* v1, const char* v2, char** out) {
  if (bn_status st = require(params != nullptr && word != nullptr &&
                                 v1 != nullptr && v2 != nullptr && out != nullptr,
                             "all arguments must be non-NULL"))
    return st;
  return guarded([&] {
    const auto pair = parse_pair(params->rep, v1, v2);
    const auto value =
        f_value(params->rep, pair, exponent_summary(word->rep));
    *out = copy_string(braidnorm::to_string(value));
  });
}

bn_status bn_bound_report_json(const bn_params* params, const bn_word* word,
                               char** out) {
  if (bn_status st = require(params != nullptr && word != nullptr && out != nullptr,
                             "params, word and out must not be NULL"))
    return st;
  return guarded([&] {
    *out = copy_string(
        bound_report_to_json(hofer_lower_bound(params->rep, word->rep)));
  });
}

bn_status bn_maximize_json(const bn_params* params, const bn_word* word,
                           int with_sweep, char** out) {
  if (bn_status st = require(params != nullptr && word != nullptr && out != nullptr,
                             "params, word and out must not be NULL"))
    return st;
  return guarded([&] {
    const auto summary = exponent_summary(word->rep);
    const auto closed = f_max_closed(params->rep, summary);
    const auto [lp_value, lp_argmax] = f_max_lp(params->rep, summary);
    ordered_json j;
    j["closed"] = braidnorm::to_string(closed.value);
    j["lp"] = braidnorm::to_string(lp_value);
    j["agree"] = closed.value == lp_value;
    j["witness"] = {{"v1", weights_json(closed.witness.v1)},
                    {"v2", weights_json(closed.witness.v2)}};
    j["lp_argmax"] = {{"v1", weights_json(lp_argmax.v1)},
                      {"v2", weights_json(lp_argmax.v2)}};
    j["terms"] = {{"R", braidnorm::to_string(closed.terms.R)},
                  {"S", braidnorm::to_string(closed.terms.S)},
                  {"T", braidnorm::to_string(closed.terms.T)},
                  {"D", braidnorm::to_string(closed.terms.D)}};
    j["summary"] = summary_json(summary);
    if (with_sweep != 0) {
      ordered_json sweep = ordered_json::array();
      for (const auto& v1 : weight_vertices(params->rep)) {
        for (const auto& v2 : weight_vertices(params->rep)) {
          const braidnorm::WeightPair pair{v1, v2};
          sweep.push_back({{"v1", weights_json(v1)},
                           {"v2", weights_json(v2)},
                           {"value", braidnorm::to_string(
                                         f_value(params->rep, pair, summary))}});
        }
      }
      j["sweep"] = std::move(sweep);
    }
    *out = copy_string(j.dump());
  });
}

bn_status bn_disc_lk_bound(const bn_params* params, const bn_word* word,
                           char** out) {
  if (bn_status st = require(params != nullptr && word != nullptr && out != nullptr,
                             "params, word and out must not be NULL"))
    return st;
  return guarded([&] {
    *out = copy_string(braidnorm::to_string(disc_lk_bound(params->rep, word->rep)));
  });
}

bn_status bn_check_relations_json(const bn_params* params,
                                  unsigned long long seed, int trials,
                                  char** out) {
  if (bn_status st = require(params != nullptr && out != nullptr,
                             "params and out must not be NULL"))
    return st;
  return guarded([&] {
    const auto report = check_relations(params->rep, seed, trials);
    ordered_json j;
    j["ok"] = report.ok;
    j["lines"] = report.lines;
    *out = copy_string(j.dump());
  });
}

bn_status bn_homotopy_from_json(const char* text, bn_homotopy** out) {
  if (bn_status st = require(text != nullptr && out != nullptr,
                             "text and out must not be NULL"))
    return st;
  return guarded([&] { *out = new bn_homotopy{braidnorm::homotopy_from_json(text)}; });
}

bn_status bn_homotopy_model(const char* name, int m, int n, bn_homotopy** out) {
  if (bn_status st = require(name != nullptr && out != nullptr,
                             "name and out must not be NULL"))
    return st;
  return guarded([&] {
    const std::string which(name);
    if (which == "elementary") {
      *out = new bn_homotopy{braidnorm::elementary_model(m, n)};
    } else if (which == "sigma") {
      *out = new bn_homotopy{braidnorm::sigma_contraction_model(m, n)};
    } else {
      throw std::invalid_argument("unknown model '" + which +
                                  "' (expected elementary or sigma)");
    }
  });
}

void bn_homotopy_free(bn_homotopy* h) { delete h; }

bn_status bn_homotopy_to_json(const bn_homotopy* h, char** out) {
  if (bn_status st = require(h != nullptr && out != nullptr,
                             "homotopy and out must not be NULL"))
    return st;
  return guarded([&] { *out = copy_string(homotopy_to_json(h->rep)); });
}

bn_status bn_intersections_json(const bn_homotopy* h, double tol, char** out) {
  if (bn_status st = require(h != nullptr && out != nullptr,
                             "homotopy and out must not be NULL"))
    return st;
  return guarded([&] {
    const auto count = signed_intersections(h->rep, tol);
    const int winding = boundary_winding(h->rep);
    ordered_json records = ordered_json::array();
    for (const auto& r : count.records)
      records.push_back({{"cell", {r.cell_i, r.cell_j}},
                         {"s", r.s},
                         {"t", r.t},
                         {"sign", r.sign}});
    ordered_json j;
    j["records"] = std::move(records);
    j["total"] = count.total;
    j["boundary_winding"] = winding;
    j["agree"] = count.total == winding;
    *out = copy_string(j.dump());
  });
}

bn_status bn_boundary_winding(const bn_homotopy* h, long* out) {
  if (bn_status st = require(h != nullptr && out != nullptr,
                             "homotopy and out must not be NULL"))
    return st;
  return guarded([&] { *out = boundary_winding(h->rep); });
}

}  // extern "C"
