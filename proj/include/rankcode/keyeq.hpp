#pragma once

// The skew linear recurrence z_i = sum_{j=1}^{t} gamma_j z_{i-j}^{[j]} (indices
// mod n) that ties unknown error-polynomial coefficients to the known ones.

#include <optional>
#include <span>
#include <vector>

#include "rankcode/field.hpp"

namespace rankcode {

/// Partially known coefficient sequence z_0..z_{n-1}; indices are cyclic.
class KnownCoefficients {
 public:
  explicit KnownCoefficients(int n) : z_(static_cast<std::size_t>(n)) {}

  int size() const { return static_cast<int>(z_.size()); }
  void set(int i, Element v) { z_[wrap(i)] = v; }
  bool has(int i) const { return z_[wrap(i)].has_value(); }
  Element at(int i) const;

 private:
  std::size_t wrap(int i) const {
    const int n = size();
    return static_cast<std::size_t>(((i % n) + n) % n);
  }
  std::vector<std::optional<Element>> z_;
};

/// Unique(gamma) when gamma_prime is empty; otherwise the line gamma + X*gamma_prime.
struct KeyEqSolution {
  std::vector<Element> gamma;
  std::vector<Element> gamma_prime;

  bool is_line() const { return !gamma_prime.empty(); }
};

/// Solves the recurrence instantiated at every i in [lo, hi) for t unknowns.
/// Throws Inconsistent (no solution) or NullityTooHigh (solution space dim >= 2).
KeyEqSolution solve_key_equation(const FieldContext& f, const KnownCoefficients& known, int t, int lo, int hi);

/// Coefficient matrix and right-hand side of the instantiated system.
struct KeyEqSystem {
  ExtMatrix a;
  std::vector<Element> b;
};
KeyEqSystem key_equation_system(const FieldContext& f, const KnownCoefficients& known, int t, int lo, int hi);

/// seed = (z_{n-1}, ..., z_{n-t}); returns z_0, z_1, ... (count terms).
std::vector<Element> extend_sequence(const FieldContext& f, std::span<const Element> gamma,
                                     std::span<const Element> seed, int count);

/// True iff one full cycle of the recurrence, started from the known window
/// z_{n-1..n-t}, reproduces every known coefficient at its index.
bool check_period_n(const FieldContext& f, std::span<const Element> gamma, const KnownCoefficients& known);

}  // namespace rankcode
