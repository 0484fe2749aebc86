#pragma once

// Decoders: Gabidulin one unit beyond half the minimum distance under Model A,
// the improved GTG/AGTG decoder under Model A, and the low-rate Model-B decoder.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rankcode/channel.hpp"
#include "rankcode/codes.hpp"
#include "rankcode/keyeq.hpp"
#include "rankcode/linpoly.hpp"

namespace rankcode {

enum class Branch { Case1, Case2, ModelBDirect };
std::string_view to_string(Branch b);

/// Where a candidate X for gamma + X*gamma' came from.
enum class XSource { Quadratic, Linear, Conjugate, Semilinear, Pole, Direct };
std::string_view to_string(XSource s);

/// Largest solution space of a degenerate (semilinear) Case-2 system that is enumerated.
inline constexpr std::uint64_t kSemilinearLimit = std::uint64_t{1} << 16;

struct XCandidate {
  Element x;
  XSource source;
  bool verified = false;
};

/// Intermediate values of the Case-2 chain.
struct Case2Trace {
  std::array<Element, 4> delta{};
  std::array<Element, 3> tau{};
  std::array<Element, 4> a{};
  std::array<Element, 4> u{};
  std::array<Element, 3> mu{};
  std::array<Element, 3> nu{};  // sigma-conjugate elimination, used when tau0 = 0 or mu vanishes
};

struct DecodeTrace {
  std::vector<Element> gamma;
  std::vector<Element> gamma_prime;
  std::optional<Case2Trace> chain;
  std::vector<XCandidate> x_candidates;
  std::optional<Element> x_chosen;
};

struct DecodeReport {
  std::vector<Element> message;
  LinearizedPoly error_poly;
  Branch branch = Branch::Case1;
  int t_used = 0;
  DecodeTrace trace;
};

/// DecodeFailure / DecodeAmbiguous / CapacityExceeded; carries the verified
/// candidates when ambiguous.
class DecodeError : public Error {
 public:
  DecodeError(ErrorCode code, const std::string& what, std::vector<XCandidate> candidates = {})
      : Error(code, what), candidates_(std::move(candidates)) {}
  const std::vector<XCandidate>& candidates() const { return candidates_; }

 private:
  std::vector<XCandidate> candidates_;
};

/// GG code, Model A (variant GabidulinBeyond). Corrects rank <= (n-k)/2
/// unconditionally and rank (n-k+1)/2 for Model-A errors.
DecodeReport decode_gabidulin(const CodeSpec& spec, const ModelAParams& params, std::span<const Element> r);
/// GTG code, Model A (variant TwistedBeyond). Corrects rank <= (n-k-1)/2 and (n-k)/2 for Model-A errors.
DecodeReport decode_gtg(const CodeSpec& spec, const ModelAParams& params, std::span<const Element> r);
/// AGTG code; same procedure with the q0-Frobenius twist.
DecodeReport decode_agtg(const CodeSpec& spec, const ModelAParams& params, std::span<const Element> r);
/// Classical unique decoding only (no model assumptions), any family.
DecodeReport decode_unique(const CodeSpec& spec, std::span<const Element> r);
/// GTG/AGTG code, Model B.
DecodeReport decode_model_b_lowrate(const CodeSpec& spec, const ModelBParams& params, std::span<const Element> r);

/// Largest k the Model-B decoder supports for this n.
int model_b_capacity(int n);

/// Model A dispatch by family.
DecodeReport decode_model_a(const CodeSpec& spec, const ModelAParams& params, std::span<const Element> r);

}  // namespace rankcode
