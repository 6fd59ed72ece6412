#pragma once

#include <vector>

#include "braidnorm/braid.hpp"
#include "braidnorm/rational.hpp"

namespace braidnorm {

// Area data of a premonotone link: k discs of equal area lambda, g
// non-contractible circles, p boundary components, on a surface of total
// area ambient_area (1 by default).
struct LinkParams {
  long k = 2;
  long g = 0;
  long p = 1;
  Rational lambda;
  Rational ambient_area = 1;
};

// Checks k >= 2, g >= 0, p >= 1, ambient_area > 0 and
// lambda in [ambient_area/(k+1), ambient_area/k). With strict_lambda the
// lower endpoint is excluded as well (the original open-interval variant).
void validate(const LinkParams& params, bool strict_lambda = false);

// (k+1)*lambda - ambient_area: the largest total gluing area keeping the
// link monotone. Non-negative for valid params.
Rational s_max(const LinkParams& params);

// Signature of the braid words the link supports: k + g strands.
GroupSignature signature_of(const LinkParams& params);

// Monotonicity constant after gluing extra_area to the boundary:
// ((k+1)*lambda - (ambient_area + extra_area)) / (2(k+2g-1)).
// Throws if extra_area < 0 or extra_area > s_max.
Rational eta(const LinkParams& params, const Rational& extra_area);

// Gluing areas per boundary component; entries >= 0, total <= s_max.
struct WeightVector {
  std::vector<Rational> s;

  Rational total() const;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

struct WeightPair {
  WeightVector v1;
  WeightVector v2;

  friend bool operator==(const WeightPair&, const WeightPair&) = default;
};

void validate(const LinkParams& params, const WeightVector& v);
void validate(const LinkParams& params, const WeightPair& pair);

// eta(s2) - eta(s1) = (s1 - s2) / (2(k+2g-1)); depends only on the totals.
Rational eta_diff(const LinkParams& params, const WeightPair& pair);

// The p+1 vertices of the weight simplex: the origin and s_max * e_j.
// Every admissible WeightVector is a convex combination of these.
std::vector<WeightVector> weight_vertices(const LinkParams& params);

// One complement component of a general link: k_i boundary circles of its
// closure, genus g_i, area.
struct ComponentData {
  long k_i = 1;
  long g_i = 0;
  Rational area;
};

// True iff every component satisfies area + 2*eta*(k_i + 2 g_i - 1) = lambda
// exactly.
bool general_monotonicity_check(const std::vector<ComponentData>& components,
                                const Rational& lambda, const Rational& eta);

}  // namespace braidnorm
