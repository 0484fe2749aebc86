#pragma once

// Linearized polynomials L(x) = sum_i a_i x^{[i]} over F_{q^n}, with the
// Dickson-matrix view used for rank computations and by the decoders.

#include <span>
#include <vector>

#include "rankcode/field.hpp"

namespace rankcode {

class LinearizedPoly {
 public:
  explicit LinearizedPoly(FieldPtr field);
  LinearizedPoly(FieldPtr field, std::vector<Element> coeffs);

  static LinearizedPoly identity(FieldPtr field);
  static LinearizedPoly monomial(FieldPtr field, int i, Element a);

  const FieldContext& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::span<const Element> coeffs() const { return coeffs_; }
  Element coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  void set_coeff(int i, Element a) { coeffs_[static_cast<std::size_t>(i)] = a; }
  bool is_zero() const;

  friend bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  FieldPtr field_;
  std::vector<Element> coeffs_;
};

Element evaluate(const LinearizedPoly& L, Element x);
std::vector<Element> evaluate_at_alphas(const LinearizedPoly& L);

/// Coefficients z with z(alphas[i]) = values[i] for all i.
LinearizedPoly interpolate(const FieldPtr& field, std::span<const Element> values);

/// D[i][j] = a_{(i-j) mod n}^{[j]}; column 0 is the coefficient vector.
ExtMatrix dickson_matrix(const LinearizedPoly& L);

/// Rank of the Dickson matrix over F_{q^n}; equals n - dim_{F_q} ker L.
int rank(const LinearizedPoly& L);

/// Matrix over F_q of the map in the alphas basis: column j = coordinates of L(alphas[j]).
ExtMatrix to_fq_matrix(const LinearizedPoly& L);

/// Rank of a matrix with entries in F_q (computed by elimination over F_{q^n}).
int fq_matrix_rank(const FieldContext& f, const ExtMatrix& m);

/// Random F_q-linearly independent family of `count` elements.
std::vector<Element> random_fq_independent(const FieldContext& f, int count, Rng& rng);

/// Rank exactly t, built as z_i = sum_j beta_j psi_j^{[i]} with independent betas and psis.
LinearizedPoly random_rank_t(const FieldPtr& field, int t, Rng& rng);

}  // namespace rankcode
