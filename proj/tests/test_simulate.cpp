#include "doctest.h"
#include "helpers.hpp"
#include "rankcode/simulate.hpp"

using namespace rankcode;
using testutil::field;

namespace {

SimConfig gg_config(int trials, std::uint64_t seed) {
  auto st = model_a_setup(field(2, 1, 6), 3, ModelAVariant::GabidulinBeyond);
  SimConfig cfg{CodeSpec::create(st.field, Family::GG, 3)};
  cfg.source = ErrorSource::ModelA;
  cfg.model_a = st.params;
  cfg.t = 2;
  cfg.trials = trials;
  cfg.seed = seed;
  return cfg;
}

bool same(const TrialResult& a, const TrialResult& b) {
  return a.index == b.index && a.outcome == b.outcome && a.branch == b.branch &&
         a.error_rank == b.error_rank && a.decoded == b.decoded;
}

}  // namespace

TEST_CASE("serial and parallel trials are identical") {
  const auto cfg = gg_config(60, 17);
  const auto s = run_trials_serial(cfg);
  const auto p = run_trials_parallel(cfg);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(same(s[i], p[i]));
  CHECK(same(run_trial(cfg, 5), s[5]));
}

TEST_CASE("seeded runs are reproducible and seeds matter") {
  const auto a = summarize(run_trials_parallel(gg_config(40, 3)));
  const auto b = summarize(run_trials_parallel(gg_config(40, 3)));
  CHECK(a.successes == b.successes);
  CHECK(a.ambiguous == b.ambiguous);
  CHECK(a.branch_histogram == b.branch_histogram);
  const auto x = run_trials_serial(gg_config(10, 3));
  const auto y = run_trials_serial(gg_config(10, 4));
  bool differ = false;
  for (std::size_t i = 0; i < x.size(); ++i) differ |= x[i].decoded != y[i].decoded;
  CHECK(differ);
}

TEST_CASE("zero-error control and summary counts") {
  auto cfg = gg_config(30, 1);
  cfg.source = ErrorSource::None;
  const auto st = summarize(run_trials_serial(cfg));
  CHECK(st.trials == 30);
  CHECK(st.successes == 30);
  CHECK(st.branch_histogram.at("Case1") == 30);

  cfg = gg_config(100, 2);
  const auto s2 = summarize(run_trials_serial(cfg));
  CHECK(s2.successes + s2.failures + s2.ambiguous == 100);
  CHECK(s2.failures == 0);
}

TEST_CASE("model B and unconstrained sources") {
  auto f = field(2, 2, 7);
  Rng rng = make_rng(1);
  Element eps;
  do eps = f->random_nonzero(rng);
  while (!twisted_norm_ok(*f, Family::GTG, 3, eps));
  SimConfig cfg{CodeSpec::create(f, Family::GTG, 3, 1, eps)};
  cfg.source = ErrorSource::ModelB;
  cfg.model_b = model_b_params(*f);
  cfg.trials = 50;
  CHECK(cfg.decoder() == DecoderKind::ModelB);
  CHECK(summarize(run_trials_parallel(cfg)).successes == 50);

  SimConfig u{CodeSpec::create(field(2, 1, 8), Family::GG, 2)};
  u.source = ErrorSource::Unconstrained;
  u.t = 3;
  u.trials = 40;
  CHECK(u.decoder() == DecoderKind::Unique);
  CHECK(summarize(run_trials_parallel(u)).successes == 40);
}
