#include "rankcode/codes.hpp"

#include <string>

namespace rankcode {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::GG: return "GG";
    case Family::GTG: return "GTG";
    case Family::AGTG: return "AGTG";
  }
  return "GG";
}

Family family_from_string(std::string_view s) {
  if (s == "GG") return Family::GG;
  if (s == "GTG") return Family::GTG;
  if (s == "AGTG") return Family::AGTG;
  throw Error(ErrorCode::InvalidParameter, "family must be GG, GTG or AGTG, got '" + std::string(s) + "'");
}

bool twisted_norm_ok(const FieldContext& f, Family family, int k, Element eps) {
  if (eps.is_zero()) return false;
  const Base base = family == Family::AGTG ? Base::Q0 : Base::Q;
  const long long u = family == Family::AGTG ? f.u() : 1;
  const bool odd_exponent = (static_cast<long long>(f.n()) * k * u) % 2 != 0;
  const Element sign = odd_exponent ? f.neg(Element{1}) : Element{1};
  return norm_to_base(f, eps, base) != sign;
}

CodeSpec CodeSpec::create(FieldPtr field, Family family, int k, long long h, Element eps, NormCheck check) {
  const int n = field->n();
  if (k < 1 || k >= n)
    throw Error(ErrorCode::InvalidDimension, "k must satisfy 1 <= k < n (k = " + std::to_string(k) + ", n = " +
                                                 std::to_string(n) + ")");
  CodeSpec spec;
  spec.family_ = family;
  spec.k_ = k;
  if (family != Family::GG) {
    if (family == Family::AGTG && !field->has_q0())
      throw Error(ErrorCode::InvalidParameter, "AGTG needs the q0 subfield (l0, u) configured");
    if (eps.is_zero()) throw Error(ErrorCode::InvalidEpsilon, "eps must be nonzero");
    if (check == NormCheck::Enforce && !twisted_norm_ok(*field, family, k, eps))
      throw Error(ErrorCode::InvalidEpsilon,
                  std::string("eps: norm of eps equals (-1)^{nk") + (family == Family::AGTG ? "u" : "") +
                      "}, so the twisted code would not be MRD");
    // The q0-Frobenius has order n*u on F_{q^n}; the q-Frobenius has order n.
    const long long order = family == Family::AGTG ? static_cast<long long>(n) * field->u() : n;
    spec.h_ = ((h % order) + order) % order;
    spec.eps_ = eps;
  }
  spec.norm_checked_ = check == NormCheck::Enforce;
  spec.field_ = std::move(field);
  return spec;
}

Element CodeSpec::twist(Element m0) const {
  const auto& f = *field_;
  switch (family_) {
    case Family::GG: return {};
    case Family::GTG: return f.mul(eps_, f.frob_q(m0, h_));
    case Family::AGTG: return f.mul(eps_, f.frob_q0(m0, h_));
  }
  return {};
}

Element CodeSpec::untwist_frobenius(Element x) const {
  const auto& f = *field_;
  return family_ == Family::AGTG ? f.frob_q0(x, -h_) : f.frob_q(x, -h_);
}

std::vector<Element> CodeSpec::message_vector(std::span<const Element> m) const {
  if (static_cast<int>(m.size()) != k_)
    throw Error(ErrorCode::LengthMismatch, "message must have k = " + std::to_string(k_) + " symbols");
  std::vector<Element> full(static_cast<std::size_t>(n()));
  std::copy(m.begin(), m.end(), full.begin());
  if (twisted()) full[static_cast<std::size_t>(k_)] = twist(m[0]);
  return full;
}

std::vector<Element> encode(const CodeSpec& spec, std::span<const Element> m) {
  const auto& f = spec.field();
  const auto mt = spec.message_vector(m);
  const auto n = static_cast<std::size_t>(spec.n());
  const auto& moore = f.moore();
  std::vector<Element> c(n);
  // c = m~ * M^T, i.e. c_i = sum_j m~_j alpha_i^{[j]}.
  for (std::size_t i = 0; i < n; ++i) {
    Element acc{};
    for (std::size_t j = 0; j < n; ++j)
      if (!mt[j].is_zero()) acc = f.add(acc, f.mul(mt[j], moore(i, j)));
    c[i] = acc;
  }
  return c;
}

std::vector<Element> eta_transform(const CodeSpec& spec, std::span<const Element> r) {
  const auto& f = spec.field();
  const auto n = static_cast<std::size_t>(spec.n());
  if (r.size() != n) throw Error(ErrorCode::LengthMismatch, "received word must have n symbols");
  const auto& w = f.moore_transpose_inverse();
  std::vector<Element> eta(n);
  for (std::size_t j = 0; j < n; ++j) {
    Element acc{};
    for (std::size_t i = 0; i < n; ++i) acc = f.add(acc, f.mul(r[i], w(i, j)));
    eta[j] = acc;
  }
  return eta;
}

std::optional<std::vector<Element>> verify_codeword(const CodeSpec& spec, std::span<const Element> c) {
  const auto eta = eta_transform(spec, c);
  const int k = spec.k();
  const int tail_start = spec.twisted() ? k + 1 : k;
  for (int i = tail_start; i < spec.n(); ++i)
    if (!eta[static_cast<std::size_t>(i)].is_zero()) return std::nullopt;
  if (spec.twisted() && eta[static_cast<std::size_t>(k)] != spec.twist(eta[0])) return std::nullopt;
  return std::vector<Element>(eta.begin(), eta.begin() + k);
}

}  // namespace rankcode
