#pragma once

// Exhaustive references used by tests and the acceptance harness. Every search
// is size-guarded; the parallel variants return exactly what the serial ones do.

#include <cstdint>
#include <span>
#include <vector>

#include "rankcode/codes.hpp"
#include "rankcode/linpoly.hpp"

namespace rankcode {

inline constexpr std::uint64_t kMessageSpaceLimit = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kFieldEnumLimit = std::uint64_t{1} << 12;

struct NearestCodeword {
  std::vector<Element> message;
  std::vector<Element> codeword;
  int distance = 0;
  bool unique = true;  // no other codeword at the same distance
};

/// Number of messages (q^n)^k, or TooLarge past the guard.
std::uint64_t message_space_size(const CodeSpec& spec);
/// Message with enumeration index idx (little-endian digits base |F_{q^n}|).
std::vector<Element> message_from_index(const CodeSpec& spec, std::uint64_t idx);

/// Ties are broken towards the smallest message index.
NearestCodeword nearest_codeword_bruteforce_serial(const CodeSpec& spec, std::span<const Element> r);
NearestCodeword nearest_codeword_bruteforce(const CodeSpec& spec, std::span<const Element> r);

/// Minimum rank over all nonzero codewords (the codes are F_q-linear).
int min_codeword_rank_bruteforce_serial(const CodeSpec& spec);
int min_codeword_rank_bruteforce(const CodeSpec& spec);

/// n - log_q |ker L| by evaluating L on every field element.
int rank_bruteforce(const LinearizedPoly& L);

/// Every X with X^2 + rX + s = 0, ascending.
std::vector<Element> quad_roots_bruteforce(const FieldContext& f, Element r, Element s);

}  // namespace rankcode
