#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "rankcode/serialize.hpp"

using namespace rankcode;
using testutil::field;

TEST_CASE("hex lists") {
  auto f = field(2, 2, 1);  // F_4
  CHECK(hex_list(*f, std::vector<Element>{f->poly_var(), Element{1}}) == Json::array({"01", "10"}));
  const auto back = parse_hex_list(*f, Json::array({"01", "10", "00"}), "x");
  CHECK(back == std::vector<Element>{f->poly_var(), Element{1}, Element{}});
  CHECK_THROWS_AS(parse_hex_list(*f, Json::array({"1"}), "x"), Error);
  CHECK_THROWS_AS(parse_hex_list(*f, Json::array({"zz"}), "x"), Error);
  CHECK_THROWS_AS(parse_hex_list(*f, Json::object(), "x"), Error);
  auto f3 = field(3, 1, 2);
  for (std::uint64_t v = 0; v < f3->size(); ++v) {
    const std::vector<Element> one{f3->from_packed(v)};
    CHECK(parse_hex_list(*f3, hex_list(*f3, one), "x") == one);
  }
}

TEST_CASE("setup round trip") {
  auto st = model_a_setup(field(2, 2, 6), 2, ModelAVariant::TwistedBeyond);
  Rng rng = make_rng(1);
  Element eps;
  do eps = st.field->random_nonzero(rng);
  while (!twisted_norm_ok(*st.field, Family::GTG, 2, eps));
  Setup s{CodeSpec::create(st.field, Family::GTG, 2, 1, eps), st.params, std::nullopt, 99};
  const Json j = setup_to_json(s);
  const Setup t = setup_from_json(j);
  CHECK(setup_to_json(t) == j);
  CHECK(t.spec.eps() == eps);
  CHECK(std::ranges::equal(t.field()->alphas(), st.field->alphas()));
  REQUIRE(t.model_a);
  CHECK(t.model_a->theta1 == st.params.theta1);
  CHECK(t.seed == 99);
}

TEST_CASE("invalid documents are rejected") {
  auto st = model_a_setup(field(2, 1, 6), 3, ModelAVariant::GabidulinBeyond);
  Setup s{CodeSpec::create(st.field, Family::GG, 3), st.params, std::nullopt, 1};
  const Json good = setup_to_json(s);
  CHECK_NOTHROW(setup_from_json(good));
  for (const char* key : {"p", "n", "k", "family"}) {
    Json j = good;
    j.erase(key);
    CHECK_THROWS_AS(setup_from_json(j), Error);
  }
  Json j = good;
  j["k"] = 7;
  CHECK_THROWS_AS(setup_from_json(j), Error);
  j = good;
  j["p"] = 4;
  CHECK_THROWS_AS(setup_from_json(j), Error);
  j = good;
  j["family"] = "XYZ";
  CHECK_THROWS_AS(setup_from_json(j), Error);
  j = good;
  j["alphas"][1] = j["alphas"][0];
  CHECK_THROWS_AS(setup_from_json(j), Error);
}

TEST_CASE("reports and stats") {
  auto st = model_a_setup(field(2, 1, 6), 3, ModelAVariant::GabidulinBeyond);
  const auto spec = CodeSpec::create(st.field, Family::GG, 3);
  const auto rep = decode_gabidulin(spec, st.params, std::vector<Element>(6));
  const Json j = report_to_json(*st.field, rep, true);
  CHECK(j.contains("message"));
  CHECK(j["t_used"] == 0);
  SimStats s;
  s.trials = 3;
  s.successes = 2;
  s.ambiguous = 1;
  const Json sj = stats_to_json(s, false);
  CHECK(sj["successes"] == 2);
  CHECK(!sj.contains("mean_decode_micros"));
  CHECK(stats_to_json(s, true).contains("mean_decode_micros"));
  CHECK(stats_to_csv(s, false).find("trials") != std::string::npos);
}
