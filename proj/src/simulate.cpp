#include "rankcode/simulate.hpp"

#include <algorithm>
#include <chrono>

namespace rankcode {

std::string_view to_string(ErrorSource s) {
  switch (s) {
    case ErrorSource::None: return "none";
    case ErrorSource::ModelA: return "A";
    case ErrorSource::ModelB: return "B";
    case ErrorSource::Unconstrained: return "unconstrained";
  }
  return "none";
}

DecoderKind SimConfig::decoder() const {
  if (model_b) return DecoderKind::ModelB;
  if (model_a) return DecoderKind::ModelA;
  return DecoderKind::Unique;
}

DecodeReport decode_configured(const SimConfig& cfg, std::span<const Element> r) {
  switch (cfg.decoder()) {
    case DecoderKind::ModelA: return decode_model_a(cfg.spec, *cfg.model_a, r);
    case DecoderKind::ModelB: return decode_model_b_lowrate(cfg.spec, *cfg.model_b, r);
    case DecoderKind::Unique: return decode_unique(cfg.spec, r);
  }
  return decode_unique(cfg.spec, r);
}

namespace {

ErrorPattern draw_error(const SimConfig& cfg, Rng& rng) {
  const auto& field = cfg.spec.field_ptr();
  switch (cfg.source) {
    case ErrorSource::None: return make_error_pattern(LinearizedPoly(field));
    case ErrorSource::ModelA:
      if (!cfg.model_a) throw Error(ErrorCode::InvalidParameter, "model A error source needs model A parameters");
      return sample_model_a_error(field, *cfg.model_a, cfg.spec.k(), cfg.t, rng);
    case ErrorSource::ModelB:
      if (!cfg.model_b) throw Error(ErrorCode::InvalidParameter, "model B error source needs model B parameters");
      return sample_model_b_error(field, *cfg.model_b, rng);
    case ErrorSource::Unconstrained:
      if (cfg.t == 0) return make_error_pattern(LinearizedPoly(field));
      return sample_rank_t_error(field, cfg.t, rng);
  }
  throw Error(ErrorCode::InvalidParameter, "unknown error source");
}

}  // namespace

TrialResult run_trial(const SimConfig& cfg, std::uint64_t index) {
  Rng rng = make_rng(cfg.seed, index);
  const auto& f = cfg.spec.field();
  std::vector<Element> m(static_cast<std::size_t>(cfg.spec.k()));
  for (auto& x : m) x = f.random(rng);
  const auto err = draw_error(cfg, rng);
  const auto r = apply_error(f, encode(cfg.spec, m), err.vector);

  TrialResult res;
  res.index = index;
  res.error_rank = err.rank;
  const auto start = std::chrono::steady_clock::now();
  try {
    auto rep = decode_configured(cfg, r);
    res.branch = rep.branch;
    res.outcome = rep.message == m ? Outcome::Success : Outcome::Failure;
    res.decoded = std::move(rep.message);
  } catch (const DecodeError& e) {
    res.outcome = e.code() == ErrorCode::DecodeAmbiguous ? Outcome::Ambiguous : Outcome::Failure;
  }
  res.decode_micros =
      std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<TrialResult> run_trials_serial(const SimConfig& cfg) {
  std::vector<TrialResult> out;
  out.reserve(static_cast<std::size_t>(std::max(cfg.trials, 0)));
  for (int i = 0; i < cfg.trials; ++i) out.push_back(run_trial(cfg, static_cast<std::uint64_t>(i)));
  return out;
}

std::vector<TrialResult> run_trials_parallel(const SimConfig& cfg) {
  const int n = std::max(cfg.trials, 0);
  std::vector<TrialResult> out(static_cast<std::size_t>(n));
  // Exceptions may not escape a parallel region; capture the first one.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = run_trial(cfg, static_cast<std::uint64_t>(i));
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

SimStats summarize(const std::vector<TrialResult>& results) {
  SimStats s;
  double total = 0;
  for (const auto& r : results) {
    ++s.trials;
    switch (r.outcome) {
      case Outcome::Success: ++s.successes; break;
      case Outcome::Failure: ++s.failures; break;
      case Outcome::Ambiguous: ++s.ambiguous; break;
    }
    if (r.branch) ++s.branch_histogram[std::string(to_string(*r.branch))];
    total += r.decode_micros;
  }
  s.mean_decode_micros = s.trials > 0 ? total / s.trials : 0;
  return s;
}

}  // namespace rankcode
