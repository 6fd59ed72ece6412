#pragma once

#include <random>
#include <utility>
#include <vector>

#include "braidnorm/braid.hpp"
#include "braidnorm/link_params.hpp"

namespace testgen {

using braidnorm::AlphabetMode;
using braidnorm::BraidWord;
using braidnorm::GroupSignature;
using braidnorm::Letter;
using braidnorm::LetterKind;
using braidnorm::LinkParams;
using braidnorm::Rational;
using braidnorm::WeightPair;
using braidnorm::WeightVector;

inline Rational rat(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline LinkParams random_params(std::mt19937_64& rng, long k_max = 5,
                                long g_max = 3, long p_max = 4) {
  std::uniform_int_distribution<long> kd(2, k_max), gd(0, g_max), pd(1, p_max);
  std::uniform_int_distribution<long> qd(0, 719);
  LinkParams params;
  params.k = kd(rng);
  params.g = gd(rng);
  params.p = pd(rng);
  // lambda = 1/(k+1) + (q/720) * (1/k - 1/(k+1)), q < 720, stays in range.
  params.lambda = rat(1, params.k + 1) +
                  rat(qd(rng), 720) * (rat(1, params.k) - rat(1, params.k + 1));
  return params;
}

inline WeightVector random_weight(const LinkParams& params, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coins(0, 999);
  std::vector<long> raw(params.p + 1);
  long sum = 0;
  for (long& r : raw) sum += (r = coins(rng));
  WeightVector v;
  v.s.assign(params.p, Rational(0));
  if (sum == 0) return v;
  const Rational top = s_max(params);
  for (long j = 0; j < params.p; ++j) v.s[j] = top * raw[j] / sum;
  return v;
}

inline WeightPair random_pair(const LinkParams& params, std::mt19937_64& rng) {
  return {random_weight(params, rng), random_weight(params, rng)};
}

// z_style: 0 mixed signs, 1 only positive z exponents, 2 only negative.
inline BraidWord random_word(const GroupSignature& sig, std::mt19937_64& rng,
                             int max_len = 40, int z_style = 0) {
  std::vector<std::pair<LetterKind, int>> pool;
  for (int i = 1; i <= sig.contractible() - 1; ++i)
    pool.push_back({LetterKind::Sigma, i});
  for (int i = 1; i <= sig.genus; ++i) {
    pool.push_back({LetterKind::A, i});
    pool.push_back({LetterKind::C, i});
  }
  for (int j = 1; j <= sig.punctures - 1; ++j) pool.push_back({LetterKind::Z, j});
  BraidWord w{sig, AlphabetMode::Restricted, {}};
  if (pool.empty()) return w;
  std::uniform_int_distribution<int> len_d(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> exp_d(1, 3);
  std::bernoulli_distribution flip(0.5);
  const int len = len_d(rng);
  for (int i = 0; i < len; ++i) {
    const auto [kind, index] = pool[pick(rng)];
    long long e = exp_d(rng);
    bool negate = flip(rng);
    if (kind == LetterKind::Z) {
      if (z_style == 1) negate = false;
      if (z_style == 2) negate = true;
    }
    if (negate) e = -e;
    w.letters.push_back({kind, index, e});
  }
  return w;
}

inline BraidWord random_sigma_word(const GroupSignature& sig, std::mt19937_64& rng,
                                   int max_len = 20) {
  BraidWord w{sig, AlphabetMode::Restricted, {}};
  const int top = sig.contractible() - 1;
  if (top < 1) return w;
  std::uniform_int_distribution<int> len_d(0, max_len);
  std::uniform_int_distribution<int> idx_d(1, top);
  std::bernoulli_distribution flip(0.5);
  const int len = len_d(rng);
  for (int i = 0; i < len; ++i)
    w.letters.push_back({LetterKind::Sigma, idx_d(rng), flip(rng) ? -1LL : 1LL});
  return w;
}

}  // namespace testgen
