#pragma once

// Dense Gaussian elimination over an arbitrary finite field.
//
// The field is supplied as an "ops" policy exposing value_type, zero(), one(),
// add, sub, mul, inv and is_zero. Two policies are used in the project: the
// prime field F_p (PrimeFieldOps below) and the extension field F_{q^n}
// (ExtFieldOps in field.hpp).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rankcode {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

struct PrimeFieldOps {
  using value_type = std::uint32_t;
  std::uint32_t p;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const {
    const value_type s = a + b;
    return s >= p ? s - p : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p);
  }
  value_type inv(value_type a) const {
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
};

template <class T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivot_cols;  // pivot column of row r, r < rank
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Reduced row echelon form, eliminating only within the first `ncols` columns
/// (the remaining columns ride along, e.g. an augmented right-hand side).
template <class Ops>
Echelon<typename Ops::value_type> row_reduce(const Ops& ops, Matrix<typename Ops::value_type> m,
                                             std::size_t ncols) {
  using T = typename Ops::value_type;
  Echelon<T> out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ncols && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && ops.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(sel, pivot_row);
    const T scale = ops.inv(m(pivot_row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) = ops.mul(m(pivot_row, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row) continue;
      const T factor = m(r, col);
      if (ops.is_zero(factor)) continue;
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) = ops.sub(m(r, c), ops.mul(factor, m(pivot_row, c)));
    }
    out.pivot_cols.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class Ops>
Echelon<typename Ops::value_type> row_reduce(const Ops& ops, Matrix<typename Ops::value_type> m) {
  const std::size_t cols = m.cols();
  return row_reduce(ops, std::move(m), cols);
}

template <class Ops>
std::size_t matrix_rank(const Ops& ops, Matrix<typename Ops::value_type> m) {
  return row_reduce(ops, std::move(m)).rank();
}

template <class T>
struct LinearSolution {
  std::vector<T> particular;          // free variables set to zero
  std::vector<std::vector<T>> kernel;  // basis of the null space, one vector per free variable
};

namespace detail {

template <class Ops>
std::vector<std::vector<typename Ops::value_type>> kernel_from_echelon(
    const Ops& ops, const Echelon<typename Ops::value_type>& ech, std::size_t nvars) {
  using T = typename Ops::value_type;
  std::vector<bool> is_pivot(nvars, false);
  for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<T>> kernel;
  for (std::size_t free = 0; free < nvars; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(nvars, ops.zero());
    v[free] = ops.one();
    for (std::size_t r = 0; r < ech.rank(); ++r)
      v[ech.pivot_cols[r]] = ops.sub(ops.zero(), ech.reduced(r, free));
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace detail

template <class Ops>
std::vector<std::vector<typename Ops::value_type>> kernel_basis(
    const Ops& ops, Matrix<typename Ops::value_type> a) {
  const std::size_t nvars = a.cols();
  const auto ech = row_reduce(ops, std::move(a));
  return detail::kernel_from_echelon(ops, ech, nvars);
}

/// Solves a·x = b. Returns nullopt when the system is inconsistent.
template <class Ops>
std::optional<LinearSolution<typename Ops::value_type>> solve_linear(
    const Ops& ops, const Matrix<typename Ops::value_type>& a,
    std::span<const typename Ops::value_type> b) {
  using T = typename Ops::value_type;
  const std::size_t nvars = a.cols();
  Matrix<T> aug(a.rows(), nvars + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < nvars; ++c) aug(r, c) = a(r, c);
    aug(r, nvars) = b[r];
  }
  const auto ech = row_reduce(ops, std::move(aug), nvars);
  for (std::size_t r = ech.rank(); r < a.rows(); ++r)
    if (!ops.is_zero(ech.reduced(r, nvars))) return std::nullopt;

  LinearSolution<T> sol;
  sol.particular.assign(nvars, ops.zero());
  for (std::size_t r = 0; r < ech.rank(); ++r) sol.particular[ech.pivot_cols[r]] = ech.reduced(r, nvars);
  sol.kernel = detail::kernel_from_echelon(ops, ech, nvars);
  return sol;
}

template <class Ops>
std::optional<Matrix<typename Ops::value_type>> invert(const Ops& ops,
                                                      const Matrix<typename Ops::value_type>& a) {
  using T = typename Ops::value_type;
  const std::size_t n = a.rows();
  if (a.cols() != n) return std::nullopt;
  Matrix<T> aug(n, 2 * n, ops.zero());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = ops.one();
  }
  const auto ech = row_reduce(ops, std::move(aug), n);
  if (ech.rank() != n) return std::nullopt;
  Matrix<T> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
  return inv;
}

}  // namespace rankcode
