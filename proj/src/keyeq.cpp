#include "rankcode/keyeq.hpp"

#include <string>

namespace rankcode {

Element KnownCoefficients::at(int i) const {
  const auto& v = z_[wrap(i)];
  if (!v) throw Error(ErrorCode::InvalidParameter, "coefficient z_" + std::to_string(i) + " is not known");
  return *v;
}

KeyEqSystem key_equation_system(const FieldContext& f, const KnownCoefficients& known, int t, int lo, int hi) {
  if (t < 0) throw Error(ErrorCode::InvalidParameter, "t must be non-negative");
  const auto rows = static_cast<std::size_t>(hi > lo ? hi - lo : 0);
  KeyEqSystem sys{ExtMatrix(rows, static_cast<std::size_t>(t)), std::vector<Element>(rows)};
  for (std::size_t r = 0; r < rows; ++r) {
    const int i = lo + static_cast<int>(r);
    sys.b[r] = known.at(i);
    for (int j = 1; j <= t; ++j) sys.a(r, static_cast<std::size_t>(j - 1)) = f.frob(known.at(i - j), j);
  }
  return sys;
}

KeyEqSolution solve_key_equation(const FieldContext& f, const KnownCoefficients& known, int t, int lo, int hi) {
  const auto sys = key_equation_system(f, known, t, lo, hi);
  auto sol = solve_linear(f.ext_ops(), sys.a, std::span<const Element>(sys.b));
  if (!sol) throw Error(ErrorCode::Inconsistent, "key equation has no solution for t = " + std::to_string(t));
  if (sol->kernel.size() >= 2)
    throw Error(ErrorCode::NullityTooHigh,
                "key equation solution space has dimension " + std::to_string(sol->kernel.size()));
  KeyEqSolution out{std::move(sol->particular), {}};
  if (sol->kernel.size() == 1) out.gamma_prime = std::move(sol->kernel.front());
  return out;
}

std::vector<Element> extend_sequence(const FieldContext& f, std::span<const Element> gamma,
                                     std::span<const Element> seed, int count) {
  const std::size_t t = gamma.size();
  if (seed.size() != t) throw Error(ErrorCode::LengthMismatch, "seed length must equal |gamma|");
  // history[j-1] = z_{i-j}
  std::vector<Element> history(seed.begin(), seed.end());
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int step = 0; step < count; ++step) {
    Element z{};
    for (std::size_t j = 1; j <= t; ++j)
      if (!gamma[j - 1].is_zero()) z = f.add(z, f.mul(gamma[j - 1], f.frob(history[j - 1], static_cast<long long>(j))));
    out.push_back(z);
    if (t > 0) {
      for (std::size_t j = t - 1; j > 0; --j) history[j] = history[j - 1];
      history[0] = z;
    }
  }
  return out;
}

bool check_period_n(const FieldContext& f, std::span<const Element> gamma, const KnownCoefficients& known) {
  const int n = f.n();
  const int t = static_cast<int>(gamma.size());
  std::vector<Element> seed;
  for (int j = 1; j <= t; ++j) {
    if (!known.has(n - j)) return false;
    seed.push_back(known.at(n - j));
  }
  const auto z = extend_sequence(f, gamma, seed, n);
  for (int i = 0; i < n; ++i)
    if (known.has(i) && known.at(i) != z[static_cast<std::size_t>(i)]) return false;
  return true;
}

}  // namespace rankcode
