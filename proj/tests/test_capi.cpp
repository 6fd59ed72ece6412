#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <braidnorm.h>

#include <json.hpp>

#include <memory>
#include <string>

using nlohmann::json;

namespace {

struct Params {
  bn_params* ptr = nullptr;
  ~Params() { bn_params_free(ptr); }
};

struct Word {
  bn_word* ptr = nullptr;
  ~Word() { bn_word_free(ptr); }
};

struct Homotopy {
  bn_homotopy* ptr = nullptr;
  ~Homotopy() { bn_homotopy_free(ptr); }
};

std::string grab(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  bn_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("parameter lifecycle and scalar queries") {
  Params params;
  REQUIRE(bn_params_new(2, 1, 2, "2/5", nullptr, &params.ptr) == BN_OK);

  char* out = nullptr;
  REQUIRE(bn_params_s_max(params.ptr, &out) == BN_OK);
  CHECK(grab(out) == "1/5");

  out = nullptr;
  REQUIRE(bn_params_eta(params.ptr, nullptr, &out) == BN_OK);
  CHECK(grab(out) == "1/30");

  out = nullptr;
  REQUIRE(bn_params_eta(params.ptr, "1/5", &out) == BN_OK);
  CHECK(grab(out) == "0/1");

  CHECK(bn_params_eta(params.ptr, "1/4", &out) == BN_ERR_INVALID_ARGUMENT);
  CHECK(std::string(bn_last_error()).find("s_max") != std::string::npos);

  Params from_json;
  REQUIRE(bn_params_from_json(R"({"k":2,"g":1,"p":2,"lambda":"2/5"})",
                              &from_json.ptr) == BN_OK);

  Params bad;
  CHECK(bn_params_new(1, 0, 1, "1/2", nullptr, &bad.ptr) ==
        BN_ERR_INVALID_ARGUMENT);
  CHECK(bn_params_new(2, 0, 1, "x", nullptr, &bad.ptr) ==
        BN_ERR_INVALID_ARGUMENT);
  CHECK(bn_params_new(2, 0, 1, nullptr, nullptr, &bad.ptr) ==
        BN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("word parsing, formatting and summaries") {
  Word word;
  REQUIRE(bn_word_parse("s1 z1^2 a1", 3, 1, 2, BN_MODE_RESTRICTED, &word.ptr) ==
          BN_OK);

  char* out = nullptr;
  REQUIRE(bn_word_summary_json(word.ptr, &out) == BN_OK);
  CHECK(json::parse(grab(out)) ==
        json::parse(R"({"k_gen":1,"k_sigma":1,"k":[2,0]})"));

  Word bad;
  CHECK(bn_word_parse("s9", 3, 1, 2, BN_MODE_RESTRICTED, &bad.ptr) ==
        BN_ERR_PARSE);
  CHECK(bn_word_parse("??", 3, 1, 2, BN_MODE_RESTRICTED, &bad.ptr) ==
        BN_ERR_PARSE);
  CHECK(bn_word_parse("s1", 3, 1, 2, 99, &bad.ptr) == BN_ERR_INVALID_ARGUMENT);

  Word reduced;
  Word parsed;
  REQUIRE(bn_word_parse("a1 a1^-1 s1", 3, 1, 2, BN_MODE_RESTRICTED, &parsed.ptr) ==
          BN_OK);
  REQUIRE(bn_word_free_reduce(parsed.ptr, &reduced.ptr) == BN_OK);
  out = nullptr;
  REQUIRE(bn_word_format(reduced.ptr, &out) == BN_OK);
  CHECK(grab(out) == "s1");

  Word conj;
  REQUIRE(bn_word_parse("c1", 3, 1, 2, BN_MODE_RESTRICTED, &conj.ptr) == BN_OK);
  Word expanded;
  REQUIRE(bn_word_expand(conj.ptr, &expanded.ptr) == BN_OK);
  out = nullptr;
  REQUIRE(bn_word_format(expanded.ptr, &out) == BN_OK);
  CHECK(grab(out) == "b1^-1 a1 b1");

  Word sigma;
  REQUIRE(bn_word_parse("s1 s2^-1", 4, 0, 1, BN_MODE_RESTRICTED, &sigma.ptr) ==
          BN_OK);
  long long lk = 99;
  REQUIRE(bn_word_linking_number(sigma.ptr, &lk) == BN_OK);
  CHECK(lk == 0);
  CHECK(bn_word_linking_number(conj.ptr, &lk) == BN_ERR_INVALID_ARGUMENT);

  Word z_last;
  REQUIRE(bn_z_last_word(2, 1, 2, &z_last.ptr) == BN_OK);
  out = nullptr;
  REQUIRE(bn_word_format(z_last.ptr, &out) == BN_OK);
  CHECK(grab(out) == "c1 a1^-1 s1^2 z1^-1");
}

TEST_CASE("bounds through the C surface") {
  Params params;
  REQUIRE(bn_params_new(2, 1, 1, "2/5", nullptr, &params.ptr) == BN_OK);
  Word word;
  REQUIRE(bn_word_parse("s1", 3, 1, 1, BN_MODE_RESTRICTED, &word.ptr) == BN_OK);

  char* out = nullptr;
  REQUIRE(bn_bound_report_json(params.ptr, word.ptr, &out) == BN_OK);
  const json report = json::parse(grab(out));
  CHECK(report.at("half_bound") == "1/180");
  CHECK(report.at("f_max") == "1/90");

  out = nullptr;
  REQUIRE(bn_f_value(params.ptr, word.ptr, "0", "1/5", &out) == BN_OK);
  CHECK(grab(out) == "1/90");
  CHECK(bn_f_value(params.ptr, word.ptr, "0,0", "1/5,0", &out) ==
        BN_ERR_INVALID_ARGUMENT);

  out = nullptr;
  REQUIRE(bn_maximize_json(params.ptr, word.ptr, 1, &out) == BN_OK);
  const json maxed = json::parse(grab(out));
  CHECK(maxed.at("agree") == true);
  CHECK(maxed.at("closed") == "1/90");
  CHECK(maxed.at("sweep").size() == 4);

  Params disc;
  REQUIRE(bn_params_new(3, 0, 1, "3/10", nullptr, &disc.ptr) == BN_OK);
  Word two_twists;
  REQUIRE(bn_word_parse("s1 s2", 3, 0, 1, BN_MODE_RESTRICTED, &two_twists.ptr) ==
          BN_OK);
  out = nullptr;
  REQUIRE(bn_disc_lk_bound(disc.ptr, two_twists.ptr, &out) == BN_OK);
  CHECK(grab(out) == "1/60");

  out = nullptr;
  REQUIRE(bn_check_relations_json(params.ptr, 7, 25, &out) == BN_OK);
  CHECK(json::parse(grab(out)).at("ok") == true);

  // signature mismatch between word and params
  CHECK(bn_bound_report_json(disc.ptr, word.ptr, &out) ==
        BN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("homotopies through the C surface") {
  Homotopy model;
  REQUIRE(bn_homotopy_model("elementary", 32, 32, &model.ptr) == BN_OK);

  long winding = 0;
  REQUIRE(bn_boundary_winding(model.ptr, &winding) == BN_OK);
  CHECK(winding == 1);

  char* out = nullptr;
  REQUIRE(bn_intersections_json(model.ptr, 1e-9, &out) == BN_OK);
  const json counted = json::parse(grab(out));
  CHECK(counted.at("total") == 1);
  CHECK(counted.at("boundary_winding") == 1);
  CHECK(counted.at("agree") == true);
  REQUIRE(counted.at("records").size() == 1);
  CHECK(counted.at("records")[0].at("sign") == 1);

  out = nullptr;
  REQUIRE(bn_homotopy_to_json(model.ptr, &out) == BN_OK);
  Homotopy reloaded;
  REQUIRE(bn_homotopy_from_json(grab(out).c_str(), &reloaded.ptr) == BN_OK);

  Homotopy sigma;
  REQUIRE(bn_homotopy_model("sigma", 64, 64, &sigma.ptr) == BN_OK);
  out = nullptr;
  REQUIRE(bn_intersections_json(sigma.ptr, 1e-9, &out) == BN_OK);
  CHECK(json::parse(grab(out)).at("agree") == true);

  Homotopy bad;
  CHECK(bn_homotopy_model("nope", 16, 16, &bad.ptr) == BN_ERR_INVALID_ARGUMENT);
  CHECK(bn_homotopy_from_json("{", &bad.ptr) == BN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("null arguments are rejected, not crashed on") {
  CHECK(bn_params_new(2, 0, 1, "3/10", nullptr, nullptr) ==
        BN_ERR_INVALID_ARGUMENT);
  CHECK(bn_word_parse(nullptr, 3, 0, 1, BN_MODE_RESTRICTED, nullptr) ==
        BN_ERR_INVALID_ARGUMENT);
  CHECK(bn_bound_report_json(nullptr, nullptr, nullptr) ==
        BN_ERR_INVALID_ARGUMENT);
  CHECK(bn_intersections_json(nullptr, 1e-9, nullptr) ==
        BN_ERR_INVALID_ARGUMENT);
  CHECK(std::string(bn_last_error()).size() > 0);
  bn_params_free(nullptr);
  bn_word_free(nullptr);
  bn_homotopy_free(nullptr);
  bn_string_free(nullptr);
}
