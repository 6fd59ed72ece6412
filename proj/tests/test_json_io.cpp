#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidnorm/hofer.hpp"
#include "braidnorm/json_io.hpp"
#include "generators.hpp"

using namespace braidnorm;
using testgen::rat;

TEST_CASE("rational parsing and canonical rendering") {
  CHECK(to_string(parse_rational("2/4")) == "1/2");
  CHECK(to_string(parse_rational("-2/4")) == "-1/2");
  CHECK(to_string(parse_rational("3")) == "3/1");
  CHECK(to_string(parse_rational("0")) == "0/1");
  CHECK(parse_rational("+1/3") == rat(1, 3));
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("bound report serialisation is canonical and round-trips") {
  LinkParams params;
  params.k = 2;
  params.g = 1;
  params.p = 1;
  params.lambda = rat(2, 5);
  const BraidWord word =
      parse_word("s1", signature_of(params), AlphabetMode::Restricted);
  const BoundReport report = hofer_lower_bound(params, word);
  const std::string text = bound_report_to_json(report);
  CHECK(text ==
        R"({"f_max":"1/90","half_bound":"1/180","asymptotic_bound":"1/180",)"
        R"("argmax":{"v1":["0/1"],"v2":["1/5"]},)"
        R"("summary":{"k_gen":0,"k_sigma":1,"k":[0]},)"
        R"("terms":{"R":"0/1","S":"1/6","T":"-1/6","D":"-1/6"}})");

  // parse + re-serialise reproduces identical bytes
  CHECK(bound_report_to_json(bound_report_from_json(text)) == text);

  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    const LinkParams rp = testgen::random_params(rng);
    const BraidWord w = testgen::random_word(signature_of(rp), rng);
    const std::string bytes = bound_report_to_json(hofer_lower_bound(rp, w));
    CHECK(bound_report_to_json(bound_report_from_json(bytes)) == bytes);
  }

  CHECK_THROWS_AS(bound_report_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(bound_report_from_json("{\"f_max\":\"1/2\"}"),
                  std::invalid_argument);
}

TEST_CASE("parameter config objects") {
  const LinkParams params = params_from_json(
      R"({"k":2,"g":1,"p":2,"lambda":"2/5"})");
  CHECK(params.k == 2);
  CHECK(params.g == 1);
  CHECK(params.p == 2);
  CHECK(params.lambda == rat(2, 5));
  CHECK(params.ambient_area == 1);

  const LinkParams scaled = params_from_json(
      R"({"k":2,"g":0,"p":1,"lambda":"4/5","area":"2/1"})");
  CHECK(scaled.ambient_area == 2);

  CHECK(params_to_json(params) ==
        R"({"k":2,"g":1,"p":2,"lambda":"2/5","area":"1/1"})");
  CHECK_THROWS_AS(params_from_json(R"({"k":2,"g":1,"p":2})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(params_from_json(R"({"k":1,"g":0,"p":1,"lambda":"1/2"})"),
                  std::invalid_argument);
}

TEST_CASE("homotopy files round-trip bit-exactly") {
  const Homotopy model = sigma_contraction_model(12, 9);
  const std::string text = homotopy_to_json(model);
  const Homotopy back = homotopy_from_json(text);
  CHECK(back.m == model.m);
  CHECK(back.n == model.n);
  REQUIRE(back.grid.size() == model.grid.size());
  for (std::size_t i = 0; i < model.grid.size(); ++i) {
    CHECK(back.grid[i].a == model.grid[i].a);
    CHECK(back.grid[i].b == model.grid[i].b);
  }
  CHECK(homotopy_to_json(back) == text);

  CHECK_THROWS_AS(homotopy_from_json("[]"), std::invalid_argument);
  CHECK_THROWS_AS(homotopy_from_json(R"({"M":2,"N":2,"a":[[0,0]],"b":[[0,0]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(homotopy_from_json(R"({"M":2,"N":2,"a":[[0]],"b":[[0,0]]})"),
                  std::invalid_argument);
}

TEST_CASE("weight vectors from comma-separated rationals") {
  const WeightVector v = weight_vector_from_csv("1/5,0", 2);
  CHECK(v.s == std::vector<Rational>{rat(1, 5), Rational(0)});
  CHECK(weight_vector_from_csv("0", 1).s == std::vector<Rational>{Rational(0)});
  CHECK_THROWS_AS(weight_vector_from_csv("1/5", 2), std::invalid_argument);
  CHECK_THROWS_AS(weight_vector_from_csv("1/5,,0", 3), std::invalid_argument);
  CHECK_THROWS_AS(weight_vector_from_csv("", 1), std::invalid_argument);
}
