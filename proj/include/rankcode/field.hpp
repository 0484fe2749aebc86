#pragma once

// Arithmetic in F_{q^n}, q = p^l, realised as a single degree l*n extension of
// F_p. Subfields (F_q, F_{q0}, the fixed field of [n/2]) are recognised by
// Frobenius fixed-point tests instead of separate towers.
//
// Elements are stored packed: the coefficient vector (c_0, ..., c_{N-1}) of the
// polynomial-basis representation is the base-p integer sum c_i p^i. The packing
// is a bijection onto [0, p^N), so uniform sampling is uniform integer sampling.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rankcode/errors.hpp"
#include "rankcode/linalg.hpp"

namespace rankcode {

struct Element {
  std::uint32_t value = 0;

  bool is_zero() const { return value == 0; }
  friend auto operator<=>(Element, Element) = default;
};

using Rng = std::mt19937_64;

/// Per-trial generator derived from (master seed, trial index).
Rng make_rng(std::uint64_t master_seed, std::uint64_t stream = 0);

struct FieldParams {
  std::uint32_t p = 2;
  int l = 1;
  int n = 2;
  int s = 1;
  int l0 = 0;  // q0 = p^l0, q = q0^u; 0 when no q0 subfield is configured
  int u = 0;
  std::vector<std::uint32_t> modulus;  // optional: monic, low-to-high, degree l*n
};

enum class Base { Q, Q0 };

class FieldContext;
using FieldPtr = std::shared_ptr<const FieldContext>;

/// Elimination policy for matrices over F_{q^n}.
struct ExtFieldOps {
  using value_type = Element;
  const FieldContext* field;

  Element zero() const { return {}; }
  Element one() const { return {1}; }
  bool is_zero(Element a) const { return a.value == 0; }
  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
};

using FpMatrix = Matrix<std::uint32_t>;
using ExtMatrix = Matrix<Element>;

class FieldContext {
 public:
  /// Builds the field; searches the lexicographically first irreducible modulus
  /// when none is supplied. Default evaluation points are 1, y, ..., y^{n-1}.
  static FieldPtr create(const FieldParams& params);

  /// Same field with a different ordered evaluation basis (must be F_q-independent).
  FieldPtr with_alphas(std::vector<Element> alphas) const;

  const FieldParams& params() const { return params_; }
  std::uint32_t p() const { return params_.p; }
  int l() const { return params_.l; }
  int n() const { return params_.n; }
  int s() const { return params_.s; }
  int l0() const { return params_.l0; }
  int u() const { return params_.u; }
  bool has_q0() const { return params_.l0 > 0; }
  int degree() const { return degree_; }  // N = l*n over F_p
  std::uint64_t size() const { return size_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t q0() const;
  const std::vector<std::uint32_t>& modulus() const { return params_.modulus; }

  // Arithmetic.
  Element add(Element a, Element b) const {
    if (params_.p == 2) return {a.value ^ b.value};
    return add_odd(a, b);
  }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element neg(Element a) const;
  Element mul(Element a, Element b) const {
    if (a.value == 0 || b.value == 0) return {};
    return {tables_->exp[tables_->log[a.value] + tables_->log[b.value]]};
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;
  Element scalar(std::uint32_t c) const;  // embedding of F_p

  /// x^{p^e}; e may be negative (inverse Frobenius).
  Element frob_p(Element x, long long e) const;
  /// x^{[i]} = x^{q^{s i}}, i taken mod n.
  Element frob(Element x, long long i) const { return frob_p(x, static_cast<long long>(params_.l) * params_.s * i); }
  Element frob_q(Element x, long long e) const { return frob_p(x, static_cast<long long>(params_.l) * e); }
  Element frob_q0(Element x, long long e) const;

  /// Absolute trace to F_p.
  std::uint32_t absolute_trace(Element x) const;
  bool in_subfield_of_degree(Element x, int e) const { return frob_p(x, e) == x; }

  Element primitive() const { return tables_->primitive; }
  Element poly_var() const { return tables_->y; }
  Element from_packed(std::uint64_t v) const;
  Element random(Rng& rng) const;
  Element random_nonzero(Rng& rng) const;

  std::vector<std::uint32_t> coords(Element x) const;
  Element from_coords(std::span<const std::uint32_t> c) const;

  std::string to_hex(Element x) const;
  Element from_hex(std::string_view s) const;

  // Evaluation basis and Moore matrix M[i][j] = alphas[i]^{[j]}.
  std::span<const Element> alphas() const { return alphas_; }
  const ExtMatrix& moore() const { return moore_; }
  const ExtMatrix& moore_transpose_inverse() const { return moore_t_inv_; }
  /// Coordinates (in F_q) of x with respect to the alphas basis.
  std::vector<Element> alpha_coords(Element x) const;

  /// F_p-matrix of x -> x^{[i]} on the coordinate space.
  const FpMatrix& frob_table(int i) const;
  Element apply_fp_map(const FpMatrix& m, Element x) const;

  /// F_p-basis of F_q (and of F_{q0}) inside F_{q^n}.
  const std::vector<Element>& fq_basis() const { return fq_basis_; }
  const std::vector<Element>& fq0_basis() const { return fq0_basis_; }

  /// Characteristic 2 only: a fixed element of absolute trace 1.
  Element trace_one_element() const { return tables_->trace_one; }

  PrimeFieldOps prime_ops() const { return {params_.p}; }
  ExtFieldOps ext_ops() const { return {this}; }

 private:
  struct Tables {
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> exp;  // length 2*(size-1) so log sums need no reduction
    std::vector<std::uint64_t> frob_mult;  // p^e mod (size-1), e in [0, N)
    std::vector<std::uint32_t> pow_p;      // p^i, i in [0, N]
    Element primitive;
    Element y;
    Element trace_one;
  };

  FieldContext() = default;
  Element add_odd(Element a, Element b) const;
  void install_alphas(std::vector<Element> alphas);
  std::vector<Element> subfield_basis(int e) const;

  FieldParams params_;
  int degree_ = 0;
  std::uint64_t size_ = 0;
  std::uint64_t q_ = 0;
  std::shared_ptr<const Tables> tables_;
  std::vector<FpMatrix> frob_tables_;
  std::vector<Element> fq_basis_;
  std::vector<Element> fq0_basis_;
  std::vector<Element> alphas_;
  ExtMatrix moore_;
  ExtMatrix moore_t_inv_;
};

// Field-level operations.

Element frobenius_pow(const FieldContext& f, Element x, long long i);
Element norm_to_base(const FieldContext& f, Element x, Base base);
/// x + x^{[n/2]}; requires n even.
Element trace_sigma(const FieldContext& f, Element x);
/// One solution x of x^{[n/2]} - x = a (canonical: free coordinates zero).
Element solve_sigma_affine(const FieldContext& f, Element a);
/// Solutions of a X^{[n/2]} + b X + c = 0: particular + F_p-span(directions).
struct SigmaAffineSpace {
  Element particular;
  std::vector<Element> directions;
};
std::optional<SigmaAffineSpace> solve_sigma_semilinear(const FieldContext& f, Element a, Element b, Element c);
/// All roots of X^2 + rX + s in F_{q^n}, each verified.
std::vector<Element> solve_quadratic(const FieldContext& f, Element r, Element s);
/// Square root by Tonelli-Shanks (odd characteristic); nullopt for non-residues.
std::optional<Element> square_root(const FieldContext& f, Element a);

/// Number of F_q-linearly independent entries (rank-metric weight).
int fq_rank(const FieldContext& f, std::span<const Element> v);
bool fq_independent(const FieldContext& f, std::span<const Element> v);

/// Rank-metric distance between equal-length vectors.
int rank_distance(const FieldContext& f, std::span<const Element> a, std::span<const Element> b);

}  // namespace rankcode
