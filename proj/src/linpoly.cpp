#include "rankcode/linpoly.hpp"

#include <algorithm>

namespace rankcode {

LinearizedPoly::LinearizedPoly(FieldPtr field)
    : field_(std::move(field)), coeffs_(static_cast<std::size_t>(field_->n())) {}

LinearizedPoly::LinearizedPoly(FieldPtr field, std::vector<Element> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field_->n())
    throw Error(ErrorCode::LengthMismatch, "linearized polynomial needs exactly n coefficients");
}

LinearizedPoly LinearizedPoly::identity(FieldPtr field) { return monomial(std::move(field), 0, Element{1}); }

LinearizedPoly LinearizedPoly::monomial(FieldPtr field, int i, Element a) {
  LinearizedPoly L(std::move(field));
  const int n = L.field().n();
  L.set_coeff(((i % n) + n) % n, a);
  return L;
}

bool LinearizedPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Element a) { return a.is_zero(); });
}

Element evaluate(const LinearizedPoly& L, Element x) {
  const auto& f = L.field();
  Element acc{};
  for (int i = 0; i < f.n(); ++i) {
    const Element a = L.coeff(i);
    if (!a.is_zero()) acc = f.add(acc, f.mul(a, f.frob(x, i)));
  }
  return acc;
}

std::vector<Element> evaluate_at_alphas(const LinearizedPoly& L) {
  std::vector<Element> out;
  out.reserve(L.coeffs().size());
  for (Element a : L.field().alphas()) out.push_back(evaluate(L, a));
  return out;
}

LinearizedPoly interpolate(const FieldPtr& field, std::span<const Element> values) {
  const auto& f = *field;
  const auto n = static_cast<std::size_t>(f.n());
  if (values.size() != n) throw Error(ErrorCode::LengthMismatch, "interpolation needs n values");
  // values = z * M^T, so z = values * (M^T)^{-1}.
  const auto& w = f.moore_transpose_inverse();
  std::vector<Element> z(n);
  for (std::size_t j = 0; j < n; ++j) {
    Element acc{};
    for (std::size_t i = 0; i < n; ++i) acc = f.add(acc, f.mul(values[i], w(i, j)));
    z[j] = acc;
  }
  return LinearizedPoly(field, std::move(z));
}

ExtMatrix dickson_matrix(const LinearizedPoly& L) {
  const auto& f = L.field();
  const int n = f.n();
  ExtMatrix d(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      d(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = f.frob(L.coeff(((i - j) % n + n) % n), j);
  return d;
}

int rank(const LinearizedPoly& L) {
  return static_cast<int>(matrix_rank(L.field().ext_ops(), dickson_matrix(L)));
}

ExtMatrix to_fq_matrix(const LinearizedPoly& L) {
  const auto& f = L.field();
  const auto n = static_cast<std::size_t>(f.n());
  ExtMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto c = f.alpha_coords(evaluate(L, f.alphas()[j]));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = c[i];
  }
  return m;
}

int fq_matrix_rank(const FieldContext& f, const ExtMatrix& m) {
  return static_cast<int>(matrix_rank(f.ext_ops(), m));
}

std::vector<Element> random_fq_independent(const FieldContext& f, int count, Rng& rng) {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    out.push_back(f.random_nonzero(rng));
    if (!fq_independent(f, out)) out.pop_back();
  }
  return out;
}

LinearizedPoly random_rank_t(const FieldPtr& field, int t, Rng& rng) {
  const auto& f = *field;
  if (t < 0 || t > f.n()) throw Error(ErrorCode::InvalidParameter, "rank must lie in [0, n]");
  LinearizedPoly L(field);
  if (t == 0) return L;
  const auto beta = random_fq_independent(f, t, rng);
  const auto psi = random_fq_independent(f, t, rng);
  // L(x) = sum_j beta_j Tr(psi_j x), with Tr the trace to F_q.
  for (int i = 0; i < f.n(); ++i) {
    Element acc{};
    for (int j = 0; j < t; ++j)
      acc = f.add(acc, f.mul(beta[static_cast<std::size_t>(j)], f.frob(psi[static_cast<std::size_t>(j)], i)));
    L.set_coeff(i, acc);
  }
  return L;
}

}  // namespace rankcode
