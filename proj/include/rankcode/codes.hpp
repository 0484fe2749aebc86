#pragma once

// Gabidulin (GG), generalized twisted Gabidulin (GTG) and additive GTG (AGTG)
// evaluation codes, encoded through the Moore matrix of the field's alphas.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rankcode/field.hpp"

namespace rankcode {

enum class Family { GG, GTG, AGTG };

std::string_view to_string(Family family);
Family family_from_string(std::string_view s);

enum class NormCheck {
  Enforce,  // reject eps whose norm equals (-1)^{nk} (resp. (-1)^{nku})
  Skip,     // build the twisted evaluation code anyway; it need not be MRD
};

class CodeSpec {
 public:
  /// Validated code. For GTG/AGTG the norm of eps is checked unless `check` is Skip.
  static CodeSpec create(FieldPtr field, Family family, int k, long long h = 0, Element eps = {},
                         NormCheck check = NormCheck::Enforce);

  const FieldContext& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  Family family() const { return family_; }
  int k() const { return k_; }
  int n() const { return field_->n(); }
  long long h() const { return h_; }
  Element eps() const { return eps_; }
  bool twisted() const { return family_ != Family::GG; }
  bool norm_checked() const { return norm_checked_; }

  /// eps * m0^{q^h} (GTG) or eps * m0^{q0^h} (AGTG).
  Element twist(Element m0) const;
  /// Inverse of the twist Frobenius: x -> x^{q^{-h}} (resp. q0).
  Element untwist_frobenius(Element x) const;

  /// Zero-padded coefficient vector m~ of the message polynomial.
  std::vector<Element> message_vector(std::span<const Element> m) const;

 private:
  CodeSpec() = default;

  FieldPtr field_;
  Family family_ = Family::GG;
  int k_ = 1;
  long long h_ = 0;
  Element eps_{};
  bool norm_checked_ = true;
};

/// True when eps satisfies the norm condition that makes the twisted family MRD.
bool twisted_norm_ok(const FieldContext& f, Family family, int k, Element eps);

std::vector<Element> encode(const CodeSpec& spec, std::span<const Element> m);
std::vector<Element> eta_transform(const CodeSpec& spec, std::span<const Element> r);
/// Message if c is a codeword, nullopt otherwise.
std::optional<std::vector<Element>> verify_codeword(const CodeSpec& spec, std::span<const Element> c);

}  // namespace rankcode
