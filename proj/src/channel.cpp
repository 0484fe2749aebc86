#include "rankcode/channel.hpp"

#include <string>

namespace rankcode {

std::string_view to_string(ModelAVariant v) {
  return v == ModelAVariant::GabidulinBeyond ? "GabidulinBeyond" : "TwistedBeyond";
}

ModelAVariant variant_from_string(std::string_view s) {
  if (s == "GabidulinBeyond") return ModelAVariant::GabidulinBeyond;
  if (s == "TwistedBeyond") return ModelAVariant::TwistedBeyond;
  throw Error(ErrorCode::InvalidParameter, "variant must be GabidulinBeyond or TwistedBeyond");
}

std::string_view to_string(Parity p) { return p == Parity::OddN ? "OddN" : "EvenN"; }

ErrorPattern make_error_pattern(LinearizedPoly poly) {
  ErrorPattern e{poly, evaluate_at_alphas(poly), 0};
  e.rank = rank(e.poly);
  return e;
}

namespace {

void check_model_a_shape(const FieldContext& f, int k, ModelAVariant variant) {
  const int n = f.n();
  if (n % 2 != 0)
    throw Error(ErrorCode::UnsupportedParity, "model A needs n even (n = " + std::to_string(n) + ")");
  if (k < 1 || k >= n) throw Error(ErrorCode::InvalidDimension, "model A needs 1 <= k < n");
  if (variant == ModelAVariant::GabidulinBeyond && (n - k + 1) % 2 != 0)
    throw Error(ErrorCode::UnsupportedParity, "GabidulinBeyond needs n - k + 1 even, i.e. k odd");
}

bool sigma_admissible(const FieldContext& f, Element a) { return trace_sigma(f, a).is_zero(); }

// F_q-basis of ker(x + x^{[n/2]}) followed by a completion from the current alphas.
std::vector<Element> rebuilt_alphas(const FieldContext& f) {
  const auto N = static_cast<std::size_t>(f.degree());
  const PrimeFieldOps fp = f.prime_ops();
  FpMatrix m = f.frob_table(f.n() / 2);
  for (std::size_t i = 0; i < N; ++i) m(i, i) = fp.add(m(i, i), 1);
  std::vector<Element> basis;
  for (const auto& v : kernel_basis(fp, m)) {
    basis.push_back(f.from_coords(v));
    if (!fq_independent(f, basis)) basis.pop_back();
    if (static_cast<int>(basis.size()) == f.n() / 2) break;
  }
  for (Element a : f.alphas()) {
    if (static_cast<int>(basis.size()) == f.n()) break;
    basis.push_back(a);
    if (!fq_independent(f, basis)) basis.pop_back();
  }
  return basis;
}

}  // namespace

ModelASetup model_a_setup(const FieldPtr& field, int k, ModelAVariant variant) {
  check_model_a_shape(*field, k, variant);
  auto pick = [&](const FieldContext& f) {
    std::vector<int> idx;
    for (int i = 0; i < f.n() && idx.size() < 2; ++i)
      if (sigma_admissible(f, f.alphas()[static_cast<std::size_t>(i)])) idx.push_back(i);
    return idx;
  };
  FieldPtr f = field;
  auto idx = pick(*f);
  if (idx.size() < 2) {
    f = field->with_alphas(rebuilt_alphas(*field));
    idx = pick(*f);
  }
  ModelASetup out{f, {}};
  out.params.variant = variant;
  out.params.theta1 = idx[0];
  // With c = 0 both constraints bind z_0, so they must name the same point.
  out.params.theta2 = out.params.constraint_index(k) == 0 ? idx[0] : idx[1];
  return out;
}

void validate_model_a(const FieldContext& f, int k, const ModelAParams& params) {
  check_model_a_shape(f, k, params.variant);
  const int n = f.n();
  for (auto [name, theta] : {std::pair{"theta1", params.theta1}, std::pair{"theta2", params.theta2}}) {
    if (theta < 0 || theta >= n) throw Error(ErrorCode::InvalidParameter, std::string(name) + " outside [0, n-1]");
    if (!sigma_admissible(f, f.alphas()[static_cast<std::size_t>(theta)]))
      throw Error(ErrorCode::NoSolution, std::string(name) + ": alpha + alpha^[n/2] != 0, constraint unsatisfiable");
  }
  if (params.constraint_index(k) == 0 && params.theta1 != params.theta2)
    throw Error(ErrorCode::InvalidParameter, "with k = 1 both constraints bind z_0; theta1 must equal theta2");
}

ModelBParams model_b_params(const FieldContext& f) {
  return {f.n() % 2 == 0 ? Parity::EvenN : Parity::OddN};
}

bool model_a_constraints_hold(const FieldContext& f, const ModelAParams& params, int k,
                              std::span<const Element> z) {
  const int half = f.n() / 2;
  auto phi = [&](Element x) { return f.sub(f.frob(x, half), x); };
  const auto c = static_cast<std::size_t>(params.constraint_index(k));
  return phi(z[0]) == f.alphas()[static_cast<std::size_t>(params.theta1)] &&
         phi(z[c]) == f.alphas()[static_cast<std::size_t>(params.theta2)];
}

bool model_b_relations_hold(const FieldContext& f, std::span<const Element> z) {
  const int n = f.n();
  if (n % 2 != 0) {
    for (int i = 1; i <= (n - 1) / 2; ++i)
      if (z[static_cast<std::size_t>(n - i)] != f.frob(z[static_cast<std::size_t>(i)], n - i)) return false;
  } else {
    for (int i = 1; i <= n / 2 - 1; ++i)
      if (z[static_cast<std::size_t>(n - i - 1)] != f.frob(z[static_cast<std::size_t>(i)], n - i - 1)) return false;
  }
  return true;
}

ErrorPattern sample_model_a_error(const FieldPtr& field, const ModelAParams& params, int k, int t, Rng& rng) {
  const auto& f = *field;
  validate_model_a(f, k, params);
  const int n = f.n();
  if (t < 1 || t > n) throw Error(ErrorCode::InvalidParameter, "model A rank must lie in [1, n]");
  const int c = params.constraint_index(k);
  const int half = n / 2;
  const auto N = static_cast<std::size_t>(f.degree());
  const auto tt = static_cast<std::size_t>(t);
  const PrimeFieldOps fp = f.prime_ops();
  auto phi = [&](Element x) { return f.sub(f.frob(x, half), x); };

  std::vector<std::uint32_t> rhs = f.coords(f.alphas()[static_cast<std::size_t>(params.theta1)]);
  const auto rhs2 = f.coords(f.alphas()[static_cast<std::size_t>(params.theta2)]);
  rhs.insert(rhs.end(), rhs2.begin(), rhs2.end());

  for (int attempt = 0; attempt < kSamplerRetries; ++attempt) {
    const auto psi = random_fq_independent(f, t, rng);
    // Unknowns: F_p coordinates of beta_1..beta_t. Both constraints are F_p-linear in them.
    FpMatrix a(2 * N, tt * N, 0);
    for (std::size_t j = 0; j < tt; ++j) {
      const Element psi_c = f.frob(psi[j], c);
      for (std::size_t b = 0; b < N; ++b) {
        const Element unit = f.from_coords([&] {
          std::vector<std::uint32_t> e(N, 0);
          e[b] = 1;
          return e;
        }());
        const auto top = f.coords(phi(f.mul(unit, psi[j])));
        const auto bottom = f.coords(phi(f.mul(unit, psi_c)));
        for (std::size_t r = 0; r < N; ++r) {
          a(r, j * N + b) = top[r];
          a(N + r, j * N + b) = bottom[r];
        }
      }
    }
    auto sol = solve_linear(fp, a, std::span<const std::uint32_t>(rhs));
    if (!sol) continue;
    std::vector<std::uint32_t> x = sol->particular;
    std::uniform_int_distribution<std::uint32_t> coin(0, f.p() - 1);
    for (const auto& kv : sol->kernel) {
      const std::uint32_t lambda = coin(rng);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = fp.add(x[i], fp.mul(lambda, kv[i]));
    }
    std::vector<Element> beta(tt);
    for (std::size_t j = 0; j < tt; ++j)
      beta[j] = f.from_coords(std::span<const std::uint32_t>(x).subspan(j * N, N));
    if (!fq_independent(f, beta)) continue;

    LinearizedPoly poly(field);
    for (int i = 0; i < n; ++i) {
      Element acc{};
      for (std::size_t j = 0; j < tt; ++j) acc = f.add(acc, f.mul(beta[j], f.frob(psi[j], i)));
      poly.set_coeff(i, acc);
    }
    return make_error_pattern(std::move(poly));
  }
  throw Error(ErrorCode::SamplingFailed, "no admissible rank-" + std::to_string(t) + " model A error after " +
                                             std::to_string(kSamplerRetries) + " draws");
}

ErrorPattern sample_model_b_error(const FieldPtr& field, const ModelBParams& params, Rng& rng) {
  const auto& f = *field;
  const int n = f.n();
  if (params.parity != model_b_params(f).parity)
    throw Error(ErrorCode::UnsupportedParity, "model B parity does not match n = " + std::to_string(n));
  LinearizedPoly poly(field);
  if (n % 2 != 0) {
    poly.set_coeff(0, f.random(rng));
    for (int i = 1; i <= (n - 1) / 2; ++i) {
      const Element b = f.random(rng);
      poly.set_coeff(i, b);
      poly.set_coeff(n - i, f.frob(b, n - i));
    }
  } else {
    poly.set_coeff(0, f.random(rng));
    for (int i = 1; i <= n / 2 - 1; ++i) {
      const Element h = f.random(rng);
      poly.set_coeff(i, h);
      poly.set_coeff(n - i - 1, f.frob(h, n - i - 1));
    }
    poly.set_coeff(n - 1, f.random(rng));
  }
  return make_error_pattern(std::move(poly));
}

ErrorPattern sample_rank_t_error(const FieldPtr& field, int t, Rng& rng) {
  return make_error_pattern(random_rank_t(field, t, rng));
}

std::vector<Element> apply_error(const FieldContext& f, std::span<const Element> c, std::span<const Element> e) {
  if (c.size() != e.size()) throw Error(ErrorCode::LengthMismatch, "codeword and error lengths differ");
  std::vector<Element> r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = f.add(c[i], e[i]);
  return r;
}

}  // namespace rankcode
