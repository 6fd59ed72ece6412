#pragma once

#include <string>

#include "braidnorm/hofer.hpp"
#include "braidnorm/link_params.hpp"
#include "braidnorm/sym_product.hpp"

namespace braidnorm {

// Canonical report bytes: fixed field order, rationals as "num/den" with
// positive denominator and gcd 1. Parsing the output and re-serialising it
// reproduces the exact bytes.
//
//   {"f_max":"num/den","half_bound":"num/den","asymptotic_bound":"num/den",
//    "argmax":{"v1":[...],"v2":[...]},
//    "summary":{"k_gen":int,"k_sigma":int,"k":[int,...]},
//    "terms":{"R":"num/den","S":"num/den","T":"num/den","D":"num/den"}}
std::string bound_report_to_json(const BoundReport& report);
BoundReport bound_report_from_json(const std::string& text);

// Config object {"k":int,"g":int,"p":int,"lambda":"num/den","area":"num/den"};
// "area" defaults to "1/1" when absent.
LinkParams params_from_json(const std::string& text);
std::string params_to_json(const LinkParams& params);

// {"M":int,"N":int,"a":[[re,im],...],"b":[[re,im],...]}, both arrays
// row-major over the (M+1) x (N+1) nodes (s index varies slowest).
Homotopy homotopy_from_json(const std::string& text);
std::string homotopy_to_json(const Homotopy& h);

// Comma-separated rationals, e.g. "1/5,0"; must have exactly p entries.
WeightVector weight_vector_from_csv(const std::string& text, long p);

}  // namespace braidnorm
