#include "doctest.h"
#include "helpers.hpp"
#include "rankcode/channel.hpp"
#include "rankcode/keyeq.hpp"

using namespace rankcode;
using testutil::field;

namespace {

KnownCoefficients all_known(const LinearizedPoly& L) {
  KnownCoefficients k(L.field().n());
  for (int i = 0; i < L.field().n(); ++i) k.set(i, L.coeff(i));
  return k;
}

}  // namespace

TEST_CASE("single-term recurrence") {
  auto f = field(2, 1, 6);
  Rng rng = make_rng(1);
  for (int i = 0; i < 30; ++i) {
    const auto L = random_rank_t(f, 1, rng);
    const auto known = all_known(L);
    const auto sol = solve_key_equation(*f, known, 1, 0, 6);
    REQUIRE(!sol.is_line());
    for (int j = 0; j < 6; ++j)
      if (!L.coeff(j).is_zero()) CHECK(sol.gamma[0] == f->div(L.coeff(j), f->frob(L.coeff((j + 5) % 6), 1)));
  }
}

TEST_CASE("hidden tail recovered by extension") {
  auto f = field(2, 1, 8);
  Rng rng = make_rng(2);
  for (int t = 1; t <= 3; ++t)
    for (int i = 0; i < 50; ++i) {
      const auto L = random_rank_t(f, t, rng);
      // know z_{8-2t}..z_7, solve on the rows that reference only those
      KnownCoefficients known(8);
      for (int j = 8 - 2 * t; j < 8; ++j) known.set(j, L.coeff(j));
      const auto sol = solve_key_equation(*f, known, t, 8 - t, 8);
      REQUIRE(!sol.is_line());
      std::vector<Element> seed;
      for (int j = 1; j <= t; ++j) seed.push_back(L.coeff(8 - j));
      const auto z = extend_sequence(*f, sol.gamma, seed, 8);
      CHECK(std::vector<Element>(z.begin(), z.end()) ==
            std::vector<Element>(L.coeffs().begin(), L.coeffs().end()));
      CHECK(check_period_n(*f, sol.gamma, known));
      const auto z2 = extend_sequence(*f, sol.gamma, seed, 16);
      for (int j = 0; j < 8; ++j) CHECK(z2[static_cast<std::size_t>(j)] == z2[static_cast<std::size_t>(j + 8)]);
    }
}

TEST_CASE("zero gamma") {
  auto f = field(3, 1, 4);
  const std::vector<Element> g(2), seed{Element{1}, Element{2}};
  for (Element z : extend_sequence(*f, g, seed, 10)) CHECK(z.is_zero());
  KnownCoefficients known(4);
  for (int i = 0; i < 4; ++i) known.set(i, Element{1});
  CHECK(!check_period_n(*f, g, known));
}

TEST_CASE("perturbed gamma breaks the period") {
  auto f = field(2, 1, 6);
  Rng rng = make_rng(3);
  int broken = 0;
  for (int i = 0; i < 100; ++i) {
    const auto L = random_rank_t(f, 2, rng);
    const auto known = all_known(L);
    auto g = solve_key_equation(*f, known, 2, 0, 6).gamma;
    CHECK(check_period_n(*f, g, known));
    g[rng() % 2] = f->add(g[0], f->random_nonzero(rng));
    if (!check_period_n(*f, g, known)) ++broken;
  }
  CHECK(broken >= 95);
}

TEST_CASE("one beyond half: nullity exactly one") {
  auto st = model_a_setup(field(2, 1, 6), 3, ModelAVariant::GabidulinBeyond);
  Rng rng = make_rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto e = sample_model_a_error(st.field, st.params, 3, 2, rng);
    KnownCoefficients known(6);
    for (int j = 3; j < 6; ++j) known.set(j, e.poly.coeff(j));
    const auto sol = solve_key_equation(*st.field, known, 2, 5, 6);
    CHECK(sol.is_line());
    // both gamma and gamma + gamma' satisfy the row
    const auto sys = key_equation_system(*st.field, known, 2, 5, 6);
    for (int x = 0; x < 2; ++x) {
      Element lhs{};
      for (std::size_t j = 0; j < 2; ++j) {
        const Element gj = x == 0 ? sol.gamma[j] : st.field->add(sol.gamma[j], sol.gamma_prime[j]);
        lhs = st.field->add(lhs, st.field->mul(sys.a(0, j), gj));
      }
      CHECK(lhs == sys.b[0]);
    }
  }
}

TEST_CASE("errors") {
  auto f = field(2, 1, 6);
  KnownCoefficients known(6);
  for (int i = 0; i < 6; ++i) known.set(i, Element{});
  // all-zero knowns: every gamma works
  try {
    solve_key_equation(*f, known, 2, 2, 6);
    FAIL("expected NullityTooHigh");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NullityTooHigh);
  }
  // z_i = 0 for i < 5 but z_5 = 1: t = 1 row 5 needs gamma * 0 = 1
  known.set(5, Element{1});
  try {
    solve_key_equation(*f, known, 1, 5, 6);
    FAIL("expected Inconsistent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Inconsistent);
  }
  KnownCoefficients partial(6);
  CHECK_THROWS_AS(solve_key_equation(*f, partial, 1, 1, 6), Error);
  CHECK_THROWS_AS(extend_sequence(*f, std::vector<Element>(2), std::vector<Element>(1), 3), Error);
}
