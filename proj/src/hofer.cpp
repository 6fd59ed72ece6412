#include "braidnorm/hofer.hpp"

#include <random>
#include <sstream>

namespace braidnorm {

Rational f_value(const LinkParams& params, const WeightPair& pair,
                 const ExponentSummary& summary) {
  validate(params);
  validate(params, pair);
  if (static_cast<long>(summary.k.size()) != params.p)
    throw std::invalid_argument("summary has wrong puncture count");
  const Rational d_eta = eta_diff(params, pair);
  Rational acc = d_eta * rational_from(2 * summary.k_gen - summary.k_sigma);
  for (long j = 0; j < params.p; ++j)
    acc += rational_from(summary.k[j]) * (pair.v2.s[j] - pair.v1.s[j]);
  return acc / (params.k + params.g);
}

Rational f_generator(const LinkParams& params, const WeightPair& pair,
                     const Letter& letter) {
  validate(params);
  validate(params, pair);
  if (letter.exponent == 0) throw std::invalid_argument("letter exponent must be nonzero");
  if (letter.index < 1) throw std::invalid_argument("letter index must be >= 1");
  const Rational d_eta = eta_diff(params, pair);
  const long kg = params.k + params.g;
  Rational base;
  switch (letter.kind) {
    case LetterKind::Sigma:
      if (letter.index > params.k - 1)
        throw std::invalid_argument("sigma index outside the restricted range");
      base = -d_eta / kg;
      break;
    case LetterKind::A:
    case LetterKind::C:
      if (letter.index > params.g)
        throw std::invalid_argument("handle index exceeds genus");
      base = 2 * d_eta / kg;
      if (letter.kind == LetterKind::C) base = -base;
      break;
    case LetterKind::Z:
      if (letter.index > params.p - 1)
        throw std::invalid_argument("z index must be <= p-1");
      base = (pair.v2.s[letter.index - 1] - pair.v1.s[letter.index - 1]) / kg;
      break;
    case LetterKind::B:
      throw std::invalid_argument("f is not defined on b letters");
  }
  return base * rational_from(letter.exponent);
}

MaxResult f_max_closed(const LinkParams& params, const ExponentSummary& summary) {
  validate(params);
  if (static_cast<long>(summary.k.size()) != params.p)
    throw std::invalid_argument("summary has wrong puncture count");
  const Rational D = rational_from(2 * summary.k_gen - summary.k_sigma) /
                     (2 * (params.k + 2 * params.g - 1));
  // The k vector carries the implicit zero of the last boundary slot, so
  // max/min over its p entries already include 0.
  long j_max = 0, j_min = 0;
  for (long j = 1; j < params.p; ++j) {
    if (summary.k[j] > summary.k[j_max]) j_max = j;
    if (summary.k[j] < summary.k[j_min]) j_min = j;
  }
  const Rational k_max = rational_from(summary.k[j_max]);
  const Rational k_min = rational_from(summary.k[j_min]);
  FmaxTerms terms{k_max - k_min, k_max - D, D - k_min, D};

  const Rational top = s_max(params);
  WeightVector origin;
  origin.s.assign(params.p, Rational(0));
  WeightVector at_max = origin, at_min = origin;
  at_max.s[j_max] = top;
  at_min.s[j_min] = top;

  // Witness cases in the tie-break order R, S, T.
  Rational best = terms.R;
  WeightPair witness{at_min, at_max};
  if (terms.S > best) {
    best = terms.S;
    witness = WeightPair{origin, at_max};
  }
  if (terms.T > best) {
    best = terms.T;
    witness = WeightPair{at_min, origin};
  }
  return MaxResult{top * best / (params.k + params.g), witness, terms};
}

std::pair<Rational, WeightPair> f_max_lp(const LinkParams& params,
                                         const ExponentSummary& summary) {
  const std::vector<WeightVector> vertices = weight_vertices(params);
  Rational best = -1;
  WeightPair argmax;
  for (const WeightVector& v1 : vertices) {
    for (const WeightVector& v2 : vertices) {
      const WeightPair pair{v1, v2};
      Rational value = f_value(params, pair, summary);
      if (value < 0) value = -value;
      if (value > best) {
        best = value;
        argmax = pair;
      }
    }
  }
  return {best, argmax};
}

BoundReport hofer_lower_bound(const LinkParams& params, const BraidWord& word) {
  validate(params);
  if (!(word.signature == signature_of(params)))
    throw std::invalid_argument("word signature does not match the link parameters");
  const ExponentSummary summary = exponent_summary(word);
  const MaxResult closed = f_max_closed(params, summary);
  const auto [lp_value, lp_argmax] = f_max_lp(params, summary);
  if (closed.value != lp_value) {
    std::ostringstream os;
    os << "internal error: closed-form maximum " << to_string(closed.value)
       << " differs from vertex-enumeration maximum " << to_string(lp_value);
    throw std::logic_error(os.str());
  }
  if (f_value(params, closed.witness, summary) != closed.value)
    throw std::logic_error("internal error: witness does not attain the maximum");
  BoundReport report;
  report.f_max = closed.value;
  report.argmax = closed.witness;
  report.half_bound = closed.value / 2;
  report.asymptotic_bound = report.half_bound;
  report.summary = summary;
  report.terms = closed.terms;
  return report;
}

Rational disc_lk_bound(const LinkParams& params, const BraidWord& word) {
  validate(params);
  long long lk = linking_number(word);
  if (lk < 0) lk = -lk;
  return s_max(params) * rational_from(lk) /
         (4 * (params.k + params.g) * (params.k + 2 * params.g - 1));
}

namespace {

WeightVector random_weight(const LinkParams& params, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coins(0, 999);
  std::vector<long> raw(params.p + 1);
  long sum = 0;
  for (long& r : raw) {
    r = coins(rng);
    sum += r;
  }
  WeightVector v;
  v.s.assign(params.p, Rational(0));
  if (sum == 0) return v;
  const Rational top = s_max(params);
  // raw[p] is slack, so the total stays <= s_max with exact barycentrics.
  for (long j = 0; j < params.p; ++j) v.s[j] = top * raw[j] / sum;
  return v;
}

struct CheckTally {
  std::string name;
  int failures = 0;
  int runs = 0;
};

}  // namespace

RelationCheckReport check_relations(const LinkParams& params,
                                    unsigned long long seed, int trials) {
  validate(params);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::mt19937_64 rng(seed);
  const GroupSignature sig = signature_of(params);
  const ExponentSummary z_last = exponent_summary(z_last_word(sig));
  const long kg = params.k + params.g;

  CheckTally last_loop{"z_p solved from the boundary relation"};
  CheckTally gen_values{"generator values"};
  CheckTally z_eta_form{"z_j eta-weighted form"};
  CheckTally sum_rule{"a c^-1 sum rule"};

  for (int trial = 0; trial < trials; ++trial) {
    const WeightPair pair{random_weight(params, rng), random_weight(params, rng)};
    const Rational d_eta = eta_diff(params, pair);

    ++last_loop.runs;
    const Rational expected =
        (pair.v2.s[params.p - 1] - pair.v1.s[params.p - 1]) / kg;
    if (f_value(params, pair, z_last) != expected) ++last_loop.failures;

    ++gen_values.runs;
    bool gen_ok = true;
    for (long i = 1; i <= params.g; ++i) {
      const Rational fa = f_generator(params, pair, {LetterKind::A, static_cast<int>(i), 1});
      const Rational fc = f_generator(params, pair, {LetterKind::C, static_cast<int>(i), 1});
      gen_ok = gen_ok && fa == 2 * d_eta / kg && fc == -fa;
    }
    for (long j = 1; j <= params.k - 1; ++j)
      gen_ok = gen_ok &&
               f_generator(params, pair, {LetterKind::Sigma, static_cast<int>(j), 1}) ==
                   -d_eta / kg;
    for (long j = 1; j <= params.p - 1; ++j)
      gen_ok = gen_ok &&
               f_generator(params, pair, {LetterKind::Z, static_cast<int>(j), 1}) ==
                   (pair.v2.s[j - 1] - pair.v1.s[j - 1]) / kg;
    if (!gen_ok) ++gen_values.failures;

    const Rational s1 = pair.v1.total(), s2 = pair.v2.total();
    if (params.p >= 2 && s1 != s2) {
      ++z_eta_form.runs;
      bool ok = true;
      for (long j = 1; j <= params.p - 1; ++j) {
        const Rational direct =
            f_generator(params, pair, {LetterKind::Z, static_cast<int>(j), 1});
        const Rational via_eta = -2 * d_eta * (params.k + 2 * params.g - 1) *
                                 (pair.v2.s[j - 1] - pair.v1.s[j - 1]) /
                                 (kg * (s2 - s1));
        ok = ok && direct == via_eta;
      }
      if (!ok) ++z_eta_form.failures;
    }

    if (params.g >= 1) {
      ++sum_rule.runs;
      BraidWord w{sig, AlphabetMode::Restricted,
                  {{LetterKind::A, 1, 1}, {LetterKind::C, 1, -1}}};
      if (f_value(params, pair, exponent_summary(w)) != 4 * d_eta / kg)
        ++sum_rule.failures;
    }
  }

  RelationCheckReport report;
  auto push = [&report](const CheckTally& tally) {
    if (tally.runs == 0) return;
    std::ostringstream os;
    if (tally.failures == 0) {
      os << "ok: " << tally.name << " (" << tally.runs << " weight pairs)";
    } else {
      os << "FAIL: " << tally.name << " (" << tally.failures << "/" << tally.runs
         << " weight pairs)";
      report.ok = false;
    }
    report.lines.push_back(os.str());
  };
  push(last_loop);
  push(gen_values);
  push(z_eta_form);
  push(sum_rule);

  // Maximised generator values: f(sigma) = s_max / (2(k+g)(k+2g-1)) and the
  // a and c generators give exactly twice that.
  {
    const Rational expected_sigma =
        s_max(params) / (2 * kg * (params.k + 2 * params.g - 1));
    ExponentSummary sigma_summary;
    sigma_summary.k.assign(params.p, 0);
    sigma_summary.k_sigma = 1;
    bool ok = f_max_closed(params, sigma_summary).value == expected_sigma;
    if (params.g >= 1) {
      ExponentSummary a_summary;
      a_summary.k.assign(params.p, 0);
      a_summary.k_gen = 1;
      ExponentSummary c_summary;
      c_summary.k.assign(params.p, 0);
      c_summary.k_gen = -1;
      ok = ok && f_max_closed(params, a_summary).value == 2 * expected_sigma &&
           f_max_closed(params, c_summary).value == 2 * expected_sigma;
    }
    std::ostringstream os;
    os << (ok ? "ok" : "FAIL") << ": maximised generator values 1:2:2";
    if (!ok) report.ok = false;
    report.lines.push_back(os.str());
  }
  return report;
}

}  // namespace braidnorm
