#pragma once

#include <utility>

#include "braidnorm/braid.hpp"
#include "braidnorm/link_params.hpp"
#include "braidnorm/rational.hpp"

namespace braidnorm {

// The three candidates of the closed-form maximum and the drift term
// D = (2 k_gen - k_sigma) / (2(k+2g-1)); R = k_max - k_min, S = k_max - D,
// T = D - k_min, where k_max/k_min run over the z exponent sums together
// with the implicit 0 of the last boundary slot.
struct FmaxTerms {
  Rational R;
  Rational S;
  Rational T;
  Rational D;
};

struct BoundReport {
  Rational f_max;
  WeightPair argmax;
  Rational half_bound;        // f_max / 2
  Rational asymptotic_bound;  // equals half_bound
  ExponentSummary summary;
  FmaxTerms terms;
};

// The homomorphism value at one weight pair:
//   (k+g) f = (s1-s2)/(2(k+2g-1)) * (2 k_gen - k_sigma)
//             + sum_j k_j (s_{2,j} - s_{1,j}).
Rational f_value(const LinkParams& params, const WeightPair& pair,
                 const ExponentSummary& summary);

// Value on a single generator letter, scaled by its exponent:
// f(a_i) = 2 d_eta/(k+g), f(c_i) = -2 d_eta/(k+g), f(sigma_j) = -d_eta/(k+g),
// f(z_j) = (s_{2,j} - s_{1,j})/(k+g), with d_eta = eta_diff. Letters of kind
// B are rejected.
Rational f_generator(const LinkParams& params, const WeightPair& pair,
                     const Letter& letter);

struct MaxResult {
  Rational value;
  WeightPair witness;
  FmaxTerms terms;
};

// Closed-form maximum of |f| over all weight pairs:
//   s_max/(k+g) * max{R, S, T}
// together with a delta-structure witness (all mass of v2 on the slot
// attaining k_max, all mass of v1 on the slot attaining k_min, totals in
// {0, s_max}); ties broken towards the smallest slot index and in the order
// R, S, T. The witness evaluates under f_value to exactly the maximum.
MaxResult f_max_closed(const LinkParams& params, const ExponentSummary& summary);

// Independent oracle: the objective is linear in (v1, v2), so |f| is
// maximised at a pair of simplex vertices; enumerates all (p+1)^2 pairs.
std::pair<Rational, WeightPair> f_max_lp(const LinkParams& params,
                                         const ExponentSummary& summary);

// Full lower-bound report for a Restricted-mode word. f_max is computed by
// both routes; a mismatch throws std::logic_error since the two must agree
// exactly.
BoundReport hofer_lower_bound(const LinkParams& params, const BraidWord& word);

// Disc-supported bound: s_max * |lk| / (4 (k+g) (k+2g-1)). The word must be
// sigma-only; coincides with half_bound of hofer_lower_bound on such words.
Rational disc_lk_bound(const LinkParams& params, const BraidWord& word);

struct RelationCheckReport {
  bool ok = true;
  std::vector<std::string> lines;  // one "ok: ..." or "FAIL: ..." per check
};

// Randomised consistency suite for one parameter set: the solved z_p word
// evaluates to (s_{2,p} - s_{1,p})/(k+g) at every sampled weight pair, the
// generator values match their closed expressions, and the maximised values
// of sigma/a/c generators come out in the expected 1:2:2 ratio.
RelationCheckReport check_relations(const LinkParams& params,
                                    unsigned long long seed, int trials);

}  // namespace braidnorm
