#include <benchmark/benchmark.h>

#include "rankcode/oracle.hpp"
#include "rankcode/simulate.hpp"

using namespace rankcode;

namespace {

FieldPtr gf(std::uint32_t p, int l, int n) {
  FieldParams fp;
  fp.p = p;
  fp.l = l;
  fp.n = n;
  return FieldContext::create(fp);
}

SimConfig sim_config(int trials) {
  auto st = model_a_setup(gf(2, 1, 6), 3, ModelAVariant::GabidulinBeyond);
  SimConfig cfg{CodeSpec::create(st.field, Family::GG, 3)};
  cfg.source = ErrorSource::ModelA;
  cfg.model_a = st.params;
  cfg.t = 2;
  cfg.trials = trials;
  cfg.seed = 7;
  return cfg;
}

void BM_SimulateSerial(benchmark::State& state) {
  const auto cfg = sim_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_trials_serial(cfg));
}

void BM_SimulateParallel(benchmark::State& state) {
  const auto cfg = sim_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_trials_parallel(cfg));
}

// k = 2 over F_64: 4096 codewords per search
struct OracleInput {
  CodeSpec spec;
  std::vector<Element> r;
};

OracleInput oracle_input() {
  auto f = gf(2, 1, 6);
  OracleInput in{CodeSpec::create(f, Family::GG, 2), std::vector<Element>(6)};
  Rng rng = make_rng(9);
  for (auto& x : in.r) x = f->random(rng);
  return in;
}

void BM_NearestSerial(benchmark::State& state) {
  const auto in = oracle_input();
  for (auto _ : state) benchmark::DoNotOptimize(nearest_codeword_bruteforce_serial(in.spec, in.r));
}

void BM_NearestParallel(benchmark::State& state) {
  const auto in = oracle_input();
  for (auto _ : state) benchmark::DoNotOptimize(nearest_codeword_bruteforce(in.spec, in.r));
}

}  // namespace

BENCHMARK(BM_SimulateSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NearestSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NearestParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
