#include "doctest.h"
#include "helpers.hpp"
#include "rankcode/decoders.hpp"
#include "rankcode/oracle.hpp"

using namespace rankcode;
using testutil::field;

TEST_CASE("nearest codeword: exact codewords and unique radius") {
  auto f = field(2, 1, 6);
  const auto spec = CodeSpec::create(f, Family::GG, 3);
  Rng rng = make_rng(1);
  for (int i = 0; i < 10; ++i) {
    std::vector<Element> m{f->random(rng), f->random(rng), f->random(rng)};
    const auto c = encode(spec, m);
    auto res = nearest_codeword_bruteforce(spec, c);
    CHECK(res.codeword == c);
    CHECK(res.message == m);
    CHECK(res.distance == 0);
    CHECK(res.unique);
    // rank 1 is within (d - 1) / 2 = 1
    const auto r = apply_error(*f, c, sample_rank_t_error(f, 1, rng).vector);
    res = nearest_codeword_bruteforce(spec, r);
    CHECK(res.codeword == c);
    CHECK(res.distance == 1);
    CHECK(res.unique);
  }
}

TEST_CASE("serial and parallel searches agree") {
  auto f = field(2, 1, 6);
  const auto spec = CodeSpec::create(f, Family::GG, 2);
  Rng rng = make_rng(2);
  for (int i = 0; i < 10; ++i) {
    std::vector<Element> r(6);
    for (auto& x : r) x = f->random(rng);
    const auto a = nearest_codeword_bruteforce_serial(spec, r);
    const auto b = nearest_codeword_bruteforce(spec, r);
    CHECK(a.codeword == b.codeword);
    CHECK(a.distance == b.distance);
    CHECK(a.unique == b.unique);
  }
  CHECK(min_codeword_rank_bruteforce_serial(spec) == min_codeword_rank_bruteforce(spec));
}

TEST_CASE("guards") {
  auto big = field(2, 1, 12);
  const auto spec = CodeSpec::create(big, Family::GG, 2);
  CHECK_THROWS_AS(nearest_codeword_bruteforce(spec, std::vector<Element>(12)), Error);
  auto f13 = field(2, 1, 13);
  CHECK_THROWS_AS(rank_bruteforce(LinearizedPoly::identity(f13)), Error);
  CHECK_THROWS_AS(quad_roots_bruteforce(*f13, Element{}, Element{}), Error);
}

TEST_CASE("rank by kernel counting") {
  auto f = field(2, 1, 4);
  CHECK(rank_bruteforce(LinearizedPoly::identity(f)) == 4);
  LinearizedPoly L(f);
  L.set_coeff(1, Element{1});
  L.set_coeff(0, Element{1});
  CHECK(rank_bruteforce(L) == 3);
}

TEST_CASE("quadratic roots by enumeration") {
  for (auto f : {field(2, 1, 4), field(3, 1, 2)}) {
    CHECK(quad_roots_bruteforce(*f, Element{}, Element{}) == std::vector<Element>{Element{}});
    auto roots = quad_roots_bruteforce(*f, Element{1}, Element{});
    std::vector<Element> expect{Element{}, f->neg(Element{1})};
    std::sort(expect.begin(), expect.end());
    CHECK(roots == expect);
  }
}

TEST_CASE("decoder matches the nearest codeword when unique (q=2, n=4, k=1)") {
  auto st = model_a_setup(field(2, 1, 4), 1, ModelAVariant::GabidulinBeyond);
  const auto spec = CodeSpec::create(st.field, Family::GG, 1);
  Rng rng = make_rng(3);
  int compared = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<Element> m{st.field->random(rng)};
    const auto r = apply_error(*st.field, encode(spec, m), sample_model_a_error(st.field, st.params, 1, 2, rng).vector);
    const auto near = nearest_codeword_bruteforce(spec, r);
    if (!near.unique) continue;
    ++compared;
    try {
      CHECK(encode(spec, decode_gabidulin(spec, st.params, r).message) == near.codeword);
    } catch (const DecodeError& e) {
      FAIL_CHECK("decoder failed where the nearest codeword is unique: " << e.what());
    }
  }
  CHECK(compared > 0);
}
