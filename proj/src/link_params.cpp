#include "braidnorm/link_params.hpp"

namespace braidnorm {

void validate(const LinkParams& params, bool strict_lambda) {
  if (params.k < 2) throw std::invalid_argument("k must be >= 2");
  if (params.g < 0) throw std::invalid_argument("g must be >= 0");
  if (params.p < 1) throw std::invalid_argument("p must be >= 1");
  if (params.ambient_area <= 0)
    throw std::invalid_argument("ambient area must be positive");
  const Rational lo = params.ambient_area / (params.k + 1);
  const Rational hi = params.ambient_area / params.k;
  const bool low_ok = strict_lambda ? (params.lambda > lo) : (params.lambda >= lo);
  if (!low_ok || params.lambda >= hi)
    throw std::invalid_argument(
        "lambda must lie in [area/(k+1), area/k)" +
        std::string(strict_lambda ? " with the lower endpoint excluded" : ""));
}

Rational s_max(const LinkParams& params) {
  return (params.k + 1) * params.lambda - params.ambient_area;
}

GroupSignature signature_of(const LinkParams& params) {
  return GroupSignature{static_cast<int>(params.k + params.g),
                        static_cast<int>(params.g),
                        static_cast<int>(params.p)};
}

Rational eta(const LinkParams& params, const Rational& extra_area) {
  validate(params);
  if (extra_area < 0) throw std::invalid_argument("extra area must be >= 0");
  if (extra_area > s_max(params))
    throw std::invalid_argument("extra area exceeds s_max: eta would be negative");
  const Rational num =
      (params.k + 1) * params.lambda - (params.ambient_area + extra_area);
  return num / (2 * (params.k + 2 * params.g - 1));
}

Rational WeightVector::total() const {
  Rational sum = 0;
  for (const Rational& x : s) sum += x;
  return sum;
}

void validate(const LinkParams& params, const WeightVector& v) {
  if (static_cast<long>(v.s.size()) != params.p)
    throw std::invalid_argument("weight vector must have p entries");
  for (const Rational& x : v.s)
    if (x < 0) throw std::invalid_argument("weights must be >= 0");
  if (v.total() > s_max(params))
    throw std::invalid_argument("weight total exceeds s_max");
}

void validate(const LinkParams& params, const WeightPair& pair) {
  validate(params, pair.v1);
  validate(params, pair.v2);
}

Rational eta_diff(const LinkParams& params, const WeightPair& pair) {
  return (pair.v1.total() - pair.v2.total()) /
         (2 * (params.k + 2 * params.g - 1));
}

std::vector<WeightVector> weight_vertices(const LinkParams& params) {
  validate(params);
  const Rational top = s_max(params);
  std::vector<WeightVector> vertices;
  vertices.reserve(params.p + 1);
  WeightVector origin;
  origin.s.assign(params.p, Rational(0));
  vertices.push_back(origin);
  for (long j = 0; j < params.p; ++j) {
    WeightVector v = origin;
    v.s[j] = top;
    vertices.push_back(std::move(v));
  }
  return vertices;
}

bool general_monotonicity_check(const std::vector<ComponentData>& components,
                                const Rational& lambda, const Rational& eta) {
  for (const ComponentData& c : components) {
    if (c.k_i < 1 || c.g_i < 0 || c.area <= 0)
      throw std::invalid_argument("component data out of range");
    if (c.area + 2 * eta * (c.k_i + 2 * c.g_i - 1) != lambda) return false;
  }
  return true;
}

}  // namespace braidnorm
