#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidnorm/link_params.hpp"
#include "generators.hpp"

using namespace braidnorm;
using testgen::rat;

namespace {

LinkParams make(long k, long g, long p, const Rational& lambda,
                const Rational& area = Rational(1)) {
  LinkParams params;
  params.k = k;
  params.g = g;
  params.p = p;
  params.lambda = lambda;
  params.ambient_area = area;
  return params;
}

}  // namespace

TEST_CASE("validate accepts exactly the premonotone range") {
  CHECK_NOTHROW(validate(make(2, 1, 2, rat(2, 5))));
  CHECK_THROWS_AS(validate(make(2, 1, 1, rat(1, 2))), std::invalid_argument);
  CHECK_THROWS_AS(validate(make(1, 0, 1, rat(1, 2))), std::invalid_argument);
  CHECK_THROWS_AS(validate(make(2, -1, 1, rat(2, 5))), std::invalid_argument);
  CHECK_THROWS_AS(validate(make(2, 0, 0, rat(2, 5))), std::invalid_argument);
  CHECK_THROWS_AS(validate(make(2, 0, 1, rat(2, 5), Rational(0))),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(make(2, 0, 1, rat(1, 4))), std::invalid_argument);

  // lambda = area/(k+1) sits on the half-open boundary: eta = 0 there.
  const LinkParams boundary = make(2, 0, 1, rat(1, 3));
  CHECK_NOTHROW(validate(boundary));
  CHECK_THROWS_AS(validate(boundary, /*strict_lambda=*/true), std::invalid_argument);

  // general ambient area rescales the window
  CHECK_NOTHROW(validate(make(2, 0, 1, rat(4, 5), Rational(2))));
  CHECK_THROWS_AS(validate(make(2, 0, 1, rat(2, 5), Rational(2))),
                  std::invalid_argument);
}

TEST_CASE("eta matches the monotonicity formula") {
  const LinkParams params = make(2, 1, 2, rat(2, 5));
  CHECK(eta(params, Rational(0)) == rat(1, 30));
  CHECK(eta(params, s_max(params)) == 0);
  CHECK(s_max(params) == rat(1, 5));

  const LinkParams disc = make(3, 0, 1, rat(3, 10));
  CHECK(eta(disc, Rational(0)) == rat(1, 20));

  CHECK_THROWS_AS(eta(params, s_max(params) + rat(1, 1000)), std::invalid_argument);
  CHECK_THROWS_AS(eta(params, rat(-1, 10)), std::invalid_argument);
}

TEST_CASE("eta is nonnegative and vanishes only at s_max") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const LinkParams params = testgen::random_params(rng);
    const Rational top = s_max(params);
    for (int step = 0; step <= 8; ++step) {
      const Rational s = top * step / 8;
      const Rational value = eta(params, s);
      CHECK(value >= 0);
      CHECK((value == 0) == (s == top));
    }
  }
}

TEST_CASE("eta_diff depends only on totals and is antisymmetric") {
  const LinkParams params = make(2, 1, 1, rat(2, 5));
  WeightPair pair{{{Rational(0)}}, {{rat(1, 5)}}};
  CHECK(eta_diff(params, pair) == rat(-1, 30));
  CHECK(eta_diff(params, {pair.v2, pair.v1}) == rat(1, 30));
  CHECK(eta_diff(params, {pair.v1, pair.v1}) == 0);

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const LinkParams rp = testgen::random_params(rng);
    const WeightPair wp = testgen::random_pair(rp, rng);
    CHECK(eta_diff(rp, wp) == -eta_diff(rp, {wp.v2, wp.v1}));
    // equals the actual difference of monotonicity constants
    CHECK(eta_diff(rp, wp) == eta(rp, wp.v2.total()) - eta(rp, wp.v1.total()));
  }
}

TEST_CASE("weight_vertices spans the simplex") {
  const LinkParams p1 = make(2, 1, 1, rat(2, 5));
  const auto v1 = weight_vertices(p1);
  REQUIRE(v1.size() == 2);
  CHECK(v1[0].s == std::vector<Rational>{Rational(0)});
  CHECK(v1[1].s == std::vector<Rational>{rat(1, 5)});

  const LinkParams p2 = make(2, 1, 2, rat(2, 5));
  const auto v2 = weight_vertices(p2);
  REQUIRE(v2.size() == 3);
  CHECK(v2[1].s == std::vector<Rational>{rat(1, 5), Rational(0)});
  CHECK(v2[2].s == std::vector<Rational>{Rational(0), rat(1, 5)});

  CHECK(weight_vertices(make(2, 1, 3, rat(2, 5))).size() == 4);
}

TEST_CASE("random weights are exact convex combinations of the vertices") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const LinkParams params = testgen::random_params(rng);
    const WeightVector w = testgen::random_weight(params, rng);
    CHECK_NOTHROW(validate(params, w));
    const Rational top = s_max(params);
    // barycentric coordinates: w_j / s_max on the spike vertices, the
    // remainder on the origin
    Rational origin_coeff = 1;
    for (const Rational& x : w.s) origin_coeff -= x / top;
    CHECK(origin_coeff >= 0);
    const auto vertices = weight_vertices(params);
    WeightVector recombined;
    recombined.s.assign(params.p, Rational(0));
    for (long j = 0; j < params.p; ++j)
      for (long i = 0; i < params.p; ++i)
        recombined.s[i] += (w.s[j] / top) * vertices[j + 1].s[i];
    CHECK(recombined == w);
  }
}

TEST_CASE("weight validation rejects out-of-simplex vectors") {
  const LinkParams params = make(2, 1, 2, rat(2, 5));
  CHECK_THROWS_AS(validate(params, WeightVector{{rat(1, 5), rat(1, 5)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(params, WeightVector{{rat(-1, 10), Rational(0)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(params, WeightVector{{rat(1, 5)}}),
                  std::invalid_argument);
}

TEST_CASE("general monotonicity check on the standard decomposition") {
  const LinkParams params = make(2, 1, 2, rat(2, 5));
  const Rational lambda = params.lambda;

  // discs satisfy the relation with any eta
  std::vector<ComponentData> discs(2, ComponentData{1, 0, lambda});
  CHECK(general_monotonicity_check(discs, lambda, rat(7, 13)));

  // the big component of the glued surface, for a few gluing areas
  for (int step = 0; step <= 4; ++step) {
    const Rational s = s_max(params) * step / 4;
    const Rational eta_s = eta(params, s);
    std::vector<ComponentData> components = discs;
    components.push_back({params.k, params.g, 1 + s - params.k * lambda});
    CHECK(general_monotonicity_check(components, lambda, eta_s));

    auto perturbed = components;
    perturbed.back().area += rat(1, 1000);
    CHECK_FALSE(general_monotonicity_check(perturbed, lambda, eta_s));
  }

  CHECK_THROWS_AS(
      general_monotonicity_check({ComponentData{0, 0, lambda}}, lambda, Rational(0)),
      std::invalid_argument);
}
