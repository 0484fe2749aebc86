#include "rankcode/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rankcode {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::InvalidEpsilon: return "InvalidEpsilon";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::UnsupportedParity: return "UnsupportedParity";
    case ErrorCode::SamplingFailed: return "SamplingFailed";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NullityTooHigh: return "NullityTooHigh";
    case ErrorCode::DecodeFailure: return "DecodeFailure";
    case ErrorCode::DecodeAmbiguous: return "DecodeAmbiguous";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rng make_rng(std::uint64_t master_seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

namespace {

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

// Polynomials over F_p, coefficients low-to-high, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, const PrimeFieldOps& fp) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = fp.inv(f.back());
  while (a.size() > df) {
    const std::uint32_t factor = fp.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) a[shift + i] = fp.sub(a[shift + i], fp.mul(factor, f[i]));
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, const PrimeFieldOps& fp) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = fp.add(prod[i + j], fp.mul(a[i], b[j]));
  }
  return poly_mod(std::move(prod), f, fp);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, const PrimeFieldOps& fp) {
  Poly result{1};
  base = poly_mod(std::move(base), f, fp);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, fp);
    base = poly_mulmod(base, base, f, fp);
    e >>= 1;
  }
  return result;
}

Poly poly_sub(Poly a, const Poly& b, const PrimeFieldOps& fp) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = fp.sub(a[i], b[i]);
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, const PrimeFieldOps& fp) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, fp);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

// Rabin's test: f of degree N is irreducible iff x^{p^N} = x mod f and
// gcd(x^{p^{N/r}} - x, f) = 1 for every prime r | N.
bool is_irreducible(const Poly& f, const PrimeFieldOps& fp) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  const Poly x{0, 1};
  auto x_pow_p_k = [&](int k) {
    Poly r = x;
    for (int i = 0; i < k; ++i) r = poly_powmod(r, fp.p, f, fp);
    return r;
  };
  if (poly_sub(x_pow_p_k(deg), x, fp) != Poly{}) return false;
  for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(deg))) {
    Poly g = poly_gcd(f, poly_sub(x_pow_p_k(deg / static_cast<int>(r)), x, fp), fp);
    if (g.size() != 1) return false;
  }
  return true;
}

Poly unpack(std::uint64_t v, std::uint32_t p, int degree) {
  Poly out(static_cast<std::size_t>(degree), 0);
  for (int i = 0; i < degree; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
  trim(out);
  return out;
}

std::uint32_t pack(const Poly& a, std::uint32_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return static_cast<std::uint32_t>(v);
}

int gcd_int(int a, int b) { return std::gcd(a, b); }

}  // namespace

Element ExtFieldOps::add(Element a, Element b) const { return field->add(a, b); }
Element ExtFieldOps::sub(Element a, Element b) const { return field->sub(a, b); }
Element ExtFieldOps::mul(Element a, Element b) const { return field->mul(a, b); }
Element ExtFieldOps::inv(Element a) const { return field->inv(a); }

FieldPtr FieldContext::create(const FieldParams& params) {
  if (!is_prime(params.p)) throw Error(ErrorCode::InvalidParameter, "p must be prime");
  if (params.l < 1) throw Error(ErrorCode::InvalidParameter, "l must be >= 1");
  if (params.n < 1) throw Error(ErrorCode::InvalidParameter, "n must be >= 1");
  if (params.s < 1 || gcd_int(params.s, params.n) != 1)
    throw Error(ErrorCode::InvalidParameter, "s must be positive with gcd(s, n) = 1");
  if (params.l0 != 0 || params.u != 0) {
    if (params.l0 < 1 || params.u < 1 || params.l0 * params.u != params.l)
      throw Error(ErrorCode::InvalidParameter, "q0 exponent l0 and u must satisfy l0*u = l");
  }

  auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
  ctx->params_ = params;
  ctx->degree_ = params.l * params.n;
  std::uint64_t size = 1;
  for (int i = 0; i < ctx->degree_; ++i) {
    size *= params.p;
    if (size > kMaxFieldSize)
      throw Error(ErrorCode::FieldTooLarge, "p^(l*n) exceeds the supported table size 2^20");
  }
  ctx->size_ = size;
  ctx->q_ = 1;
  for (int i = 0; i < params.l; ++i) ctx->q_ *= params.p;

  const PrimeFieldOps fp{params.p};
  const int N = ctx->degree_;

  Poly modulus;
  if (!params.modulus.empty()) {
    modulus = params.modulus;
    if (static_cast<int>(modulus.size()) != N + 1 || modulus.back() != 1)
      throw Error(ErrorCode::InvalidParameter, "modulus must be monic of degree l*n");
    for (auto c : modulus)
      if (c >= params.p) throw Error(ErrorCode::InvalidParameter, "modulus coefficient out of range");
    if (!is_irreducible(modulus, fp)) throw Error(ErrorCode::NotIrreducible, "modulus is reducible over F_p");
  } else {
    for (std::uint64_t low = 0; low < size; ++low) {
      Poly cand(static_cast<std::size_t>(N) + 1, 0);
      std::uint64_t v = low;
      for (int i = 0; i < N; ++i) {
        cand[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % params.p);
        v /= params.p;
      }
      cand[static_cast<std::size_t>(N)] = 1;
      if (is_irreducible(cand, fp)) {
        modulus = std::move(cand);
        break;
      }
    }
  }
  ctx->params_.modulus = modulus;

  auto tables = std::make_shared<Tables>();
  tables->pow_p.resize(static_cast<std::size_t>(N) + 1);
  tables->pow_p[0] = 1;
  for (int i = 1; i <= N; ++i) tables->pow_p[static_cast<std::size_t>(i)] = tables->pow_p[static_cast<std::size_t>(i) - 1] * params.p;

  const std::uint64_t order = size - 1;
  const auto factors = prime_factors(order);
  Poly generator;
  for (std::uint64_t cand = 1; cand < size; ++cand) {
    Poly g = unpack(cand, params.p, N);
    bool primitive = true;
    for (std::uint64_t r : factors) {
      if (poly_powmod(g, order / r, modulus, fp) == Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (order == 1 || primitive) {
      generator = std::move(g);
      break;
    }
  }
  tables->primitive = Element{pack(generator, params.p)};
  tables->log.assign(size, 0);
  tables->exp.assign(2 * order, 0);
  Poly acc{1};
  for (std::uint64_t i = 0; i < order; ++i) {
    const std::uint32_t v = pack(acc, params.p);
    tables->exp[i] = v;
    tables->exp[i + order] = v;
    tables->log[v] = static_cast<std::uint32_t>(i);
    acc = poly_mulmod(acc, generator, modulus, fp);
  }
  tables->frob_mult.resize(static_cast<std::size_t>(N));
  std::uint64_t pe = 1 % (order == 0 ? 1 : order);
  for (int e = 0; e < N; ++e) {
    tables->frob_mult[static_cast<std::size_t>(e)] = order == 0 ? 0 : pe;
    if (order != 0) pe = pe * params.p % order;
  }
  tables->y = Element{pack(poly_mod(Poly{0, 1}, modulus, fp), params.p)};
  ctx->tables_ = tables;

  if (params.p == 2) {
    for (std::uint64_t v = 1; v < size; ++v) {
      if (ctx->absolute_trace(Element{static_cast<std::uint32_t>(v)}) == 1) {
        tables->trace_one = Element{static_cast<std::uint32_t>(v)};
        break;
      }
    }
  }

  // F_p-matrices of the [i] maps: column b holds coords of (y^b)^{[i]}.
  ctx->frob_tables_.reserve(static_cast<std::size_t>(params.n));
  for (int i = 0; i < params.n; ++i) {
    FpMatrix m(static_cast<std::size_t>(N), static_cast<std::size_t>(N), 0);
    for (int b = 0; b < N; ++b) {
      const auto c = ctx->coords(ctx->frob(Element{tables->pow_p[static_cast<std::size_t>(b)]}, i));
      for (int r = 0; r < N; ++r) m(static_cast<std::size_t>(r), static_cast<std::size_t>(b)) = c[static_cast<std::size_t>(r)];
    }
    ctx->frob_tables_.push_back(std::move(m));
  }

  ctx->fq_basis_ = ctx->subfield_basis(params.l);
  if (ctx->has_q0()) ctx->fq0_basis_ = ctx->subfield_basis(params.l0);

  std::vector<Element> alphas;
  Element power{1};
  for (int i = 0; i < params.n; ++i) {
    alphas.push_back(power);
    power = ctx->mul(power, tables->y);
  }
  ctx->install_alphas(std::move(alphas));
  return ctx;
}

FieldPtr FieldContext::with_alphas(std::vector<Element> alphas) const {
  auto ctx = std::shared_ptr<FieldContext>(new FieldContext(*this));
  ctx->install_alphas(std::move(alphas));
  return ctx;
}

void FieldContext::install_alphas(std::vector<Element> alphas) {
  const int n = params_.n;
  if (static_cast<int>(alphas.size()) != n)
    throw Error(ErrorCode::LengthMismatch, "expected n evaluation points");
  for (auto a : alphas)
    if (a.value >= size_) throw Error(ErrorCode::InvalidParameter, "evaluation point outside the field");
  ExtMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = frob(alphas[static_cast<std::size_t>(i)], j);
  auto inv = invert(ext_ops(), m.transposed());
  if (!inv) throw Error(ErrorCode::InvalidParameter, "alphas are not F_q-linearly independent (Moore matrix singular)");
  alphas_ = std::move(alphas);
  moore_ = std::move(m);
  moore_t_inv_ = std::move(*inv);
}

std::vector<Element> FieldContext::subfield_basis(int e) const {
  // Kernel of x -> x^{p^e} - x over F_p.
  const auto N = static_cast<std::size_t>(degree_);
  FpMatrix m(N, N, 0);
  const PrimeFieldOps fp = prime_ops();
  for (std::size_t b = 0; b < N; ++b) {
    const Element basis{tables_->pow_p[b]};
    const auto c = coords(sub(frob_p(basis, e), basis));
    for (std::size_t r = 0; r < N; ++r) m(r, b) = c[r];
  }
  std::vector<Element> out;
  for (const auto& v : kernel_basis(fp, m)) out.push_back(from_coords(v));
  return out;
}

std::uint64_t FieldContext::q0() const {
  if (!has_q0()) throw Error(ErrorCode::InvalidParameter, "q0 not configured for this field");
  std::uint64_t v = 1;
  for (int i = 0; i < params_.l0; ++i) v *= params_.p;
  return v;
}

Element FieldContext::add_odd(Element a, Element b) const {
  const std::uint32_t p = params_.p;
  std::uint32_t x = a.value, y = b.value, r = 0, place = 1;
  while (x != 0 || y != 0) {
    std::uint32_t d = x % p + y % p;
    if (d >= p) d -= p;
    r += d * place;
    place *= p;
    x /= p;
    y /= p;
  }
  return {r};
}

Element FieldContext::neg(Element a) const {
  if (params_.p == 2) return a;
  const std::uint32_t p = params_.p;
  std::uint32_t x = a.value, r = 0, place = 1;
  while (x != 0) {
    const std::uint32_t d = x % p;
    r += (d == 0 ? 0 : p - d) * place;
    place *= p;
    x /= p;
  }
  return {r};
}

Element FieldContext::inv(Element a) const {
  if (a.value == 0) throw Error(ErrorCode::InvalidParameter, "inverse of zero");
  const std::uint64_t order = size_ - 1;
  return {tables_->exp[(order - tables_->log[a.value]) % order]};
}

Element FieldContext::pow(Element a, std::uint64_t e) const {
  if (e == 0) return {1};
  if (a.value == 0) return {};
  const std::uint64_t order = size_ - 1;
  return {tables_->exp[(tables_->log[a.value] * (e % order)) % order]};
}

Element FieldContext::scalar(std::uint32_t c) const { return {c % params_.p}; }

Element FieldContext::frob_p(Element x, long long e) const {
  if (x.value == 0) return x;
  const long long N = degree_;
  const auto idx = static_cast<std::size_t>(((e % N) + N) % N);
  const std::uint64_t order = size_ - 1;
  return {tables_->exp[(tables_->log[x.value] * tables_->frob_mult[idx]) % order]};
}

Element FieldContext::frob_q0(Element x, long long e) const {
  if (!has_q0()) throw Error(ErrorCode::InvalidParameter, "q0 not configured for this field");
  return frob_p(x, static_cast<long long>(params_.l0) * e);
}

std::uint32_t FieldContext::absolute_trace(Element x) const {
  Element acc{};
  for (int i = 0; i < degree_; ++i) acc = add(acc, frob_p(x, i));
  return acc.value;
}

Element FieldContext::from_packed(std::uint64_t v) const {
  if (v >= size_) throw Error(ErrorCode::InvalidParameter, "packed value outside the field");
  return {static_cast<std::uint32_t>(v)};
}

Element FieldContext::random(Rng& rng) const {
  std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(size_ - 1));
  return {dist(rng)};
}

Element FieldContext::random_nonzero(Rng& rng) const {
  std::uniform_int_distribution<std::uint32_t> dist(1, static_cast<std::uint32_t>(size_ - 1));
  return {dist(rng)};
}

std::vector<std::uint32_t> FieldContext::coords(Element x) const {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(degree_));
  std::uint32_t v = x.value;
  for (auto& d : c) {
    d = v % params_.p;
    v /= params_.p;
  }
  return c;
}

Element FieldContext::from_coords(std::span<const std::uint32_t> c) const {
  std::uint64_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * params_.p + (c[i] % params_.p);
  return {static_cast<std::uint32_t>(v)};
}

namespace {

int hex_width(std::uint32_t p) {
  int w = 1;
  for (std::uint32_t m = (p - 1) >> 4; m != 0; m >>= 4) ++w;
  return w;
}

}  // namespace

std::string FieldContext::to_hex(Element x) const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const int w = hex_width(params_.p);
  std::string out;
  out.reserve(static_cast<std::size_t>(w * degree_));
  for (std::uint32_t c : coords(x))
    for (int k = w - 1; k >= 0; --k) out.push_back(kDigits[(c >> (4 * k)) & 0xf]);
  return out;
}

Element FieldContext::from_hex(std::string_view s) const {
  const int w = hex_width(params_.p);
  if (s.size() != static_cast<std::size_t>(w * degree_))
    throw Error(ErrorCode::ParseError, "element '" + std::string(s) + "' must have " +
                                           std::to_string(w * degree_) + " hex digits");
  std::vector<std::uint32_t> c(static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) {
    std::uint32_t v = 0;
    for (int k = 0; k < w; ++k) {
      const char ch = s[static_cast<std::size_t>(i * w + k)];
      std::uint32_t d;
      if (ch >= '0' && ch <= '9') d = static_cast<std::uint32_t>(ch - '0');
      else if (ch >= 'a' && ch <= 'f') d = static_cast<std::uint32_t>(ch - 'a' + 10);
      else if (ch >= 'A' && ch <= 'F') d = static_cast<std::uint32_t>(ch - 'A' + 10);
      else throw Error(ErrorCode::ParseError, "invalid hex digit in '" + std::string(s) + "'");
      v = v * 16 + d;
    }
    if (v >= params_.p) throw Error(ErrorCode::ParseError, "coefficient out of range in '" + std::string(s) + "'");
    c[static_cast<std::size_t>(i)] = v;
  }
  return from_coords(c);
}

std::vector<Element> FieldContext::alpha_coords(Element x) const {
  const auto n = static_cast<std::size_t>(params_.n);
  std::vector<Element> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = frob(x, static_cast<long long>(i));
  std::vector<Element> c(n);
  for (std::size_t j = 0; j < n; ++j) {
    Element acc{};
    for (std::size_t i = 0; i < n; ++i) acc = add(acc, mul(moore_t_inv_(j, i), v[i]));
    c[j] = acc;
  }
  return c;
}

const FpMatrix& FieldContext::frob_table(int i) const {
  const int n = params_.n;
  return frob_tables_[static_cast<std::size_t>(((i % n) + n) % n)];
}

Element FieldContext::apply_fp_map(const FpMatrix& m, Element x) const {
  const PrimeFieldOps fp = prime_ops();
  const auto c = coords(x);
  std::vector<std::uint32_t> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::uint32_t acc = 0;
    for (std::size_t k = 0; k < m.cols(); ++k) acc = fp.add(acc, fp.mul(m(r, k), c[k]));
    out[r] = acc;
  }
  return from_coords(out);
}

// ---------------------------------------------------------------------------

Element frobenius_pow(const FieldContext& f, Element x, long long i) { return f.frob(x, i); }

Element norm_to_base(const FieldContext& f, Element x, Base base) {
  const std::uint64_t b = base == Base::Q ? f.q() : f.q0();
  if (x.is_zero()) return x;
  return f.pow(x, (f.size() - 1) / (b - 1));
}

namespace {

void require_even_n(const FieldContext& f) {
  if (f.n() % 2 != 0)
    throw Error(ErrorCode::UnsupportedParity, "the [n/2] involution needs n even (n = " + std::to_string(f.n()) + ")");
}

}  // namespace

Element trace_sigma(const FieldContext& f, Element x) {
  require_even_n(f);
  return f.add(x, f.frob(x, f.n() / 2));
}

Element solve_sigma_affine(const FieldContext& f, Element a) {
  require_even_n(f);
  if (!trace_sigma(f, a).is_zero())
    throw Error(ErrorCode::NoSolution, "x^[n/2] - x = a has no solution: a + a^[n/2] != 0");
  const auto N = static_cast<std::size_t>(f.degree());
  FpMatrix m = f.frob_table(f.n() / 2);
  const PrimeFieldOps fp = f.prime_ops();
  for (std::size_t i = 0; i < N; ++i) m(i, i) = fp.sub(m(i, i), 1);
  const auto rhs = f.coords(a);
  auto sol = solve_linear(fp, m, std::span<const std::uint32_t>(rhs));
  if (!sol) throw Error(ErrorCode::NoSolution, "x^[n/2] - x = a is inconsistent");
  return f.from_coords(sol->particular);
}

std::optional<SigmaAffineSpace> solve_sigma_semilinear(const FieldContext& f, Element a, Element b, Element c) {
  require_even_n(f);
  const auto N = static_cast<std::size_t>(f.degree());
  const PrimeFieldOps fp = f.prime_ops();
  FpMatrix m(N, N, 0);
  std::vector<std::uint32_t> unit(N, 0);
  for (std::size_t j = 0; j < N; ++j) {
    unit[j] = 1;
    const Element e = f.from_coords(unit);
    unit[j] = 0;
    const auto col = f.coords(f.add(f.mul(a, f.frob(e, f.n() / 2)), f.mul(b, e)));
    for (std::size_t i = 0; i < N; ++i) m(i, j) = col[i];
  }
  const auto rhs = f.coords(f.neg(c));
  auto sol = solve_linear(fp, m, std::span<const std::uint32_t>(rhs));
  if (!sol) return std::nullopt;
  SigmaAffineSpace out{f.from_coords(sol->particular), {}};
  for (const auto& v : sol->kernel) out.directions.push_back(f.from_coords(v));
  return out;
}

std::optional<Element> square_root(const FieldContext& f, Element a) {
  if (f.p() == 2) return f.frob_p(a, -1);
  if (a.is_zero()) return a;
  const std::uint64_t Q = f.size();
  if (f.pow(a, (Q - 1) / 2) != Element{1}) return std::nullopt;
  if (Q % 4 == 3) return f.pow(a, (Q + 1) / 4);

  // Tonelli-Shanks with Q - 1 = 2^S * R, R odd.
  std::uint64_t R = Q - 1;
  int S = 0;
  while (R % 2 == 0) {
    R /= 2;
    ++S;
  }
  Element z{};
  for (std::uint64_t v = 2; v < Q; ++v) {
    const Element c{static_cast<std::uint32_t>(v)};
    if (f.pow(c, (Q - 1) / 2) != Element{1}) {
      z = c;
      break;
    }
  }
  int M = S;
  Element c = f.pow(z, R);
  Element t = f.pow(a, R);
  Element root = f.pow(a, (R + 1) / 2);
  while (t != Element{1}) {
    int i = 0;
    Element t2 = t;
    while (t2 != Element{1}) {
      t2 = f.mul(t2, t2);
      ++i;
    }
    Element b = c;
    for (int j = 0; j < M - i - 1; ++j) b = f.mul(b, b);
    M = i;
    c = f.mul(b, b);
    t = f.mul(t, c);
    root = f.mul(root, b);
  }
  return root;
}

std::vector<Element> solve_quadratic(const FieldContext& f, Element r, Element s) {
  std::vector<Element> roots;
  auto check = [&](Element x) {
    return f.add(f.add(f.mul(x, x), f.mul(r, x)), s).is_zero();
  };
  auto push = [&](Element x) {
    if (check(x) && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
  };

  if (f.p() != 2) {
    const Element two = f.scalar(2);
    const Element four = f.scalar(4 % f.p());
    const Element disc = f.sub(f.mul(r, r), f.mul(four, s));
    const Element half = f.inv(two);
    if (disc.is_zero()) {
      push(f.mul(f.neg(r), half));
    } else if (auto root = square_root(f, disc)) {
      push(f.mul(f.add(f.neg(r), *root), half));
      push(f.mul(f.sub(f.neg(r), *root), half));
    }
  } else if (r.is_zero()) {
    // X^2 = s has the single root s^{2^{N-1}}.
    push(f.frob_p(s, f.degree() - 1));
  } else {
    // X = r*y, y^2 + y = beta.
    const Element beta = f.div(s, f.mul(r, r));
    if (f.absolute_trace(beta) == 0) {
      const Element c = f.trace_one_element();
      Element w{};
      Element inner{};  // sum_{k<j} c^{2^k}
      for (int j = 1; j < f.degree(); ++j) {
        inner = f.add(inner, f.frob_p(c, j - 1));
        w = f.add(w, f.mul(f.frob_p(beta, j), inner));
      }
      push(f.mul(w, r));
      push(f.mul(f.add(w, Element{1}), r));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int fq_rank(const FieldContext& f, std::span<const Element> v) {
  const auto& basis = f.fq_basis();
  FpMatrix m(v.size() * basis.size(), static_cast<std::size_t>(f.degree()), 0);
  std::size_t row = 0;
  for (Element x : v) {
    for (Element b : basis) {
      const auto c = f.coords(f.mul(x, b));
      for (std::size_t k = 0; k < c.size(); ++k) m(row, k) = c[k];
      ++row;
    }
  }
  return static_cast<int>(matrix_rank(f.prime_ops(), std::move(m)) / basis.size());
}

bool fq_independent(const FieldContext& f, std::span<const Element> v) {
  return fq_rank(f, v) == static_cast<int>(v.size());
}

int rank_distance(const FieldContext& f, std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "rank distance of unequal lengths");
  std::vector<Element> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = f.sub(a[i], b[i]);
  return fq_rank(f, d);
}

}  // namespace rankcode
