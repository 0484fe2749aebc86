#pragma once

// Monte-Carlo harness: random message, model-sampled error, decode, compare.
// Trial i draws everything from make_rng(seed, i), so the parallel runner
// produces exactly the serial results.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rankcode/decoders.hpp"

namespace rankcode {

enum class ErrorSource { None, ModelA, ModelB, Unconstrained };
std::string_view to_string(ErrorSource s);

/// Which decoder a configuration uses; derived from the configured model.
enum class DecoderKind { ModelA, ModelB, Unique };

struct SimConfig {
  CodeSpec spec;
  ErrorSource source = ErrorSource::None;
  std::optional<ModelAParams> model_a;
  std::optional<ModelBParams> model_b;
  int t = 0;  // rank for ModelA / Unconstrained sources
  int trials = 0;
  std::uint64_t seed = 0;

  DecoderKind decoder() const;
};

enum class Outcome { Success, Failure, Ambiguous };

struct TrialResult {
  std::uint64_t index = 0;
  Outcome outcome = Outcome::Failure;
  std::optional<Branch> branch;
  int error_rank = 0;     // realized rank of the injected error
  double decode_micros = 0;
  std::vector<Element> decoded;  // empty unless decoding returned a message
};

struct SimStats {
  int trials = 0;
  int successes = 0;
  int failures = 0;
  int ambiguous = 0;
  std::map<std::string, int> branch_histogram;
  double mean_decode_micros = 0;
};

/// One trial; exposed so tests can compare individual outcomes.
TrialResult run_trial(const SimConfig& cfg, std::uint64_t index);

std::vector<TrialResult> run_trials_serial(const SimConfig& cfg);
/// OpenMP over trials; results sorted by trial index.
std::vector<TrialResult> run_trials_parallel(const SimConfig& cfg);

SimStats summarize(const std::vector<TrialResult>& results);

/// Decodes with the decoder selected by the configuration.
DecodeReport decode_configured(const SimConfig& cfg, std::span<const Element> r);

}  // namespace rankcode
