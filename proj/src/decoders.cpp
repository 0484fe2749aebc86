#include "rankcode/decoders.hpp"

#include <algorithm>

namespace rankcode {

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::Case1: return "Case1";
    case Branch::Case2: return "Case2";
    case Branch::ModelBDirect: return "ModelBDirect";
  }
  return "Case1";
}

std::string_view to_string(XSource s) {
  switch (s) {
    case XSource::Quadratic: return "quadratic";
    case XSource::Linear: return "linear";
    case XSource::Conjugate: return "conjugate";
    case XSource::Semilinear: return "semilinear";
    case XSource::Pole: return "pole";
    case XSource::Direct: return "direct";
  }
  return "quadratic";
}

int model_b_capacity(int n) { return n % 2 != 0 ? (n - 1) / 2 : n / 2 - 1; }

namespace {

using Vec = std::vector<Element>;

// Shared state of one Model-A style decode. c is the index of the second
// constrained coefficient; the known coefficients are z_{c+1}..z_{n-1}.
struct Problem {
  const CodeSpec& spec;
  const FieldContext& f;
  std::span<const Element> r;
  Vec eta;
  KnownCoefficients known;
  int n;
  int c;

  Problem(const CodeSpec& s, std::span<const Element> received, int constraint_index)
      : spec(s), f(s.field()), r(received), eta(eta_transform(s, received)), known(s.n()), n(s.n()),
        c(constraint_index) {
    for (int i = c + 1; i < n; ++i) known.set(i, eta[static_cast<std::size_t>(i)]);
  }

  int first_known() const { return c + 1; }
};

// Builds the report for a full coefficient vector z if it explains r exactly.
std::optional<DecodeReport> finish(const Problem& pb, Vec z, Branch branch) {
  LinearizedPoly poly(pb.spec.field_ptr(), std::move(z));
  const auto e = evaluate_at_alphas(poly);
  Vec cw(pb.r.size());
  for (std::size_t i = 0; i < cw.size(); ++i) cw[i] = pb.f.sub(pb.r[i], e[i]);
  auto msg = verify_codeword(pb.spec, cw);
  if (!msg) return std::nullopt;
  DecodeReport rep{std::move(*msg), std::move(poly), branch, 0, {}};
  rep.t_used = rank(rep.error_poly);
  return rep;
}

Vec extend_full(const Problem& pb, std::span<const Element> gamma) {
  const int t = static_cast<int>(gamma.size());
  Vec seed;
  for (int j = 1; j <= t; ++j) seed.push_back(pb.known.at(pb.n - j));
  return extend_sequence(pb.f, gamma, seed, pb.n);
}

std::optional<DecodeReport> try_case1(const Problem& pb, int t) {
  const int f0 = pb.first_known();
  if (t == 0) {
    for (int i = f0; i < pb.n; ++i)
      if (!pb.known.at(i).is_zero()) return std::nullopt;
    return finish(pb, Vec(static_cast<std::size_t>(pb.n)), Branch::Case1);
  }
  KeyEqSolution sol;
  try {
    sol = solve_key_equation(pb.f, pb.known, t, f0 + t, pb.n);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (sol.is_line()) return std::nullopt;
  if (!check_period_n(pb.f, sol.gamma, pb.known)) return std::nullopt;
  auto rep = finish(pb, extend_full(pb, sol.gamma), Branch::Case1);
  if (!rep || rep->t_used != t) return std::nullopt;
  rep->trace.gamma = std::move(sol.gamma);
  return rep;
}

// Case 1 with iterative deepening over t; the first verified t is returned.
std::optional<DecodeReport> run_case1(const Problem& pb) {
  const int max_t = (pb.n - pb.first_known()) / 2;
  for (int t = 0; t <= max_t; ++t)
    if (auto rep = try_case1(pb, t)) return rep;
  return std::nullopt;
}

void add_candidate(std::vector<XCandidate>& out, Element x, XSource src) {
  for (const auto& c : out)
    if (c.x == x) return;
  out.push_back({x, src, false});
}

void add_quadratic_roots(const FieldContext& f, std::vector<XCandidate>& out, Element a2, Element a1, Element a0,
                         XSource src) {
  if (!a2.is_zero()) {
    for (Element x : solve_quadratic(f, f.div(a1, a2), f.div(a0, a2))) add_candidate(out, x, src);
  } else if (!a1.is_zero()) {
    add_candidate(out, f.neg(f.div(a0, a1)), XSource::Linear);
  }
}

// Every solution of a X^s + b X + c = 0, when the solution space is small enough.
void add_semilinear_solutions(const FieldContext& f, std::vector<XCandidate>& out, Element a, Element b, Element c) {
  if (a.is_zero() && b.is_zero()) return;
  const auto space = solve_sigma_semilinear(f, a, b, c);
  if (!space) return;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < space->directions.size(); ++i) {
    count *= f.p();
    if (count > kSemilinearLimit) return;
  }
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Element x = space->particular;
    std::uint64_t rest = idx;
    for (Element d : space->directions) {
      x = f.add(x, f.mul(f.scalar(static_cast<std::uint32_t>(rest % f.p())), d));
      rest /= f.p();
    }
    add_candidate(out, x, XSource::Semilinear);
  }
}

DecodeReport run_case2(const Problem& pb, const ModelAParams& params) {
  const auto& f = pb.f;
  const int n = pb.n;
  const int c = pb.c;
  const int t = (n - pb.first_known() + 1) / 2;
  const long long half = n / 2;
  const int k = pb.spec.k();
  auto sig = [&](Element x) { return f.frob(x, half); };
  const Element alpha1 = f.alphas()[static_cast<std::size_t>(params.theta1)];
  const Element alpha2 = f.alphas()[static_cast<std::size_t>(params.theta2)];

  KeyEqSolution sol;
  try {
    sol = solve_key_equation(f, pb.known, t, pb.first_known() + t, n);
  } catch (const Error& e) {
    throw DecodeError(ErrorCode::DecodeFailure, std::string("key equation at t = ") + std::to_string(t) + ": " + e.what());
  }
  if (!sol.is_line())
    throw DecodeError(ErrorCode::DecodeFailure, "key equation at t = " + std::to_string(t) + " is not under-determined");

  const auto& g = sol.gamma;
  const auto& gp = sol.gamma_prime;
  const auto tt = static_cast<std::size_t>(t);
  DecodeTrace trace;
  trace.gamma = g;
  trace.gamma_prime = gp;
  Case2Trace ch;

  // z_0 = delta0 + X delta1 from the row i = 0.
  for (int j = 1; j <= t; ++j) {
    const Element zj = f.frob(pb.known.at(n - j), j);
    ch.delta[0] = f.add(ch.delta[0], f.mul(g[static_cast<std::size_t>(j - 1)], zj));
    ch.delta[1] = f.add(ch.delta[1], f.mul(gp[static_cast<std::size_t>(j - 1)], zj));
  }
  // Row i = c + t without its j = t term (which carries the unknown z_c).
  const Element zct = pb.known.at(c + t);
  for (int j = 1; j < t; ++j) {
    const Element zj = f.frob(pb.known.at(c + t - j), j);
    ch.delta[2] = f.add(ch.delta[2], f.mul(g[static_cast<std::size_t>(j - 1)], zj));
    ch.delta[3] = f.add(ch.delta[3], f.mul(gp[static_cast<std::size_t>(j - 1)], zj));
  }
  ch.tau[0] = sig(ch.delta[1]);
  ch.tau[1] = f.neg(ch.delta[1]);
  ch.tau[2] = f.sub(f.sub(sig(ch.delta[0]), ch.delta[0]), alpha1);

  const Element gt = g[tt - 1];
  const Element gpt = gp[tt - 1];
  ch.a[0] = f.frob(f.sub(zct, ch.delta[2]), -t);
  ch.a[1] = f.neg(f.frob(ch.delta[3], -t));
  ch.a[2] = f.frob(gt, -t);
  ch.a[3] = f.frob(gpt, -t);
  const auto [a1, a2, a3, a4] = ch.a;
  auto mul3 = [&](Element x, Element y, Element z) { return f.mul(f.mul(x, y), z); };
  const std::array<Element, 4> v{
      f.sub(f.sub(f.mul(sig(a2), a4), f.mul(a2, sig(a4))), mul3(alpha2, sig(a4), a4)),
      f.sub(f.sub(f.mul(sig(a2), a3), f.mul(a1, sig(a4))), mul3(alpha2, sig(a4), a3)),
      f.sub(f.sub(f.mul(sig(a1), a4), f.mul(a2, sig(a3))), mul3(alpha2, sig(a3), a4)),
      f.sub(f.sub(f.mul(sig(a1), a3), f.mul(a1, sig(a3))), mul3(alpha2, sig(a3), a3)),
  };
  for (std::size_t i = 0; i < 4; ++i) ch.u[i] = f.frob(v[i], t);
  const auto [u1, u2, u3, u4] = ch.u;
  const auto [t0, t1, t2] = ch.tau;
  // u1 X X^s + u2 X^s + u3 X + u4 = 0 and t0 X^s + t1 X + t2 = 0.
  ch.mu[0] = f.mul(u1, t1);
  ch.mu[1] = f.sub(f.add(f.mul(u1, t2), f.mul(u2, t1)), f.mul(u3, t0));
  ch.mu[2] = f.sub(f.mul(u2, t2), f.mul(u4, t0));
  // Conjugating the first equation and eliminating X^s between the two forms.
  ch.nu[0] = f.sub(f.mul(u3, sig(u1)), f.mul(sig(u2), u1));
  ch.nu[1] = f.sub(f.sub(f.add(f.mul(u3, sig(u3)), f.mul(u4, sig(u1))), f.mul(sig(u2), u2)), f.mul(sig(u4), u1));
  ch.nu[2] = f.sub(f.mul(u4, sig(u3)), f.mul(sig(u4), u2));

  std::vector<XCandidate> cands;
  auto all_zero = [](const auto& arr) {
    return std::all_of(arr.begin(), arr.end(), [](Element e) { return e.is_zero(); });
  };
  if (!t0.is_zero()) {
    if (!all_zero(ch.mu))
      add_quadratic_roots(f, cands, ch.mu[0], ch.mu[1], ch.mu[2], XSource::Quadratic);
    else  // the two equations are dependent; X only obeys the tau relation
      add_semilinear_solutions(f, cands, t0, t1, t2);
  } else if (u1.is_zero()) {
    add_semilinear_solutions(f, cands, u2, u3, u4);
  }
  if (!all_zero(ch.nu)) add_quadratic_roots(f, cands, ch.nu[0], ch.nu[1], ch.nu[2], XSource::Conjugate);
  // gamma_t + X gamma'_t = 0: the row equation no longer involves z_c.
  if (!gpt.is_zero()) {
    const Element xp = f.neg(f.div(gt, gpt));
    if (zct == f.add(ch.delta[2], f.mul(ch.delta[3], xp))) add_candidate(cands, xp, XSource::Pole);
  } else if (gt.is_zero() && !ch.delta[3].is_zero()) {
    add_candidate(cands, f.div(f.sub(zct, ch.delta[2]), ch.delta[3]), XSource::Direct);
  }

  std::vector<DecodeReport> accepted;
  for (auto& cand : cands) {
    Vec gamma(tt);
    for (std::size_t j = 0; j < tt; ++j) gamma[j] = f.add(g[j], f.mul(cand.x, gp[j]));
    if (!check_period_n(f, gamma, pb.known)) continue;
    Vec z = extend_full(pb, gamma);
    if (!model_a_constraints_hold(f, params, k, z)) continue;
    auto rep = finish(pb, std::move(z), Branch::Case2);
    if (!rep || rep->t_used != t) continue;
    cand.verified = true;
    const bool dup = std::any_of(accepted.begin(), accepted.end(),
                                 [&](const DecodeReport& a) { return a.error_poly == rep->error_poly; });
    if (!dup) {
      rep->trace.x_chosen = cand.x;
      accepted.push_back(std::move(*rep));
    }
  }
  trace.chain = ch;
  trace.x_candidates = cands;
  if (accepted.empty())
    throw DecodeError(ErrorCode::DecodeFailure, "no candidate X verified at t = " + std::to_string(t), cands);
  if (accepted.size() > 1) {
    std::vector<XCandidate> ok;
    for (const auto& cnd : cands)
      if (cnd.verified) ok.push_back(cnd);
    throw DecodeError(ErrorCode::DecodeAmbiguous,
                      std::to_string(accepted.size()) + " distinct error polynomials verify at t = " + std::to_string(t),
                      ok);
  }
  auto rep = std::move(accepted.front());
  const auto chosen = rep.trace.x_chosen;
  rep.trace = std::move(trace);
  rep.trace.x_chosen = chosen;
  return rep;
}

DecodeReport decode_beyond(const CodeSpec& spec, const ModelAParams* params, std::span<const Element> r, int c) {
  if (static_cast<int>(r.size()) != spec.n())
    throw Error(ErrorCode::LengthMismatch, "received word must have n = " + std::to_string(spec.n()) + " symbols");
  Problem pb(spec, r, c);
  if (auto rep = run_case1(pb)) return std::move(*rep);
  if (params == nullptr || (spec.n() - pb.first_known() + 1) % 2 != 0)
    throw DecodeError(ErrorCode::DecodeFailure, "no error of rank <= " +
                                                    std::to_string((spec.n() - pb.first_known()) / 2) +
                                                    " explains the received word");
  return run_case2(pb, *params);
}

void require_family(const CodeSpec& spec, Family fam) {
  if (spec.family() != fam)
    throw Error(ErrorCode::InvalidParameter,
                "decoder for " + std::string(to_string(fam)) + " got a " + std::string(to_string(spec.family())) + " code");
}

}  // namespace

DecodeReport decode_gabidulin(const CodeSpec& spec, const ModelAParams& params, std::span<const Element> r) {
  require_family(spec, Family::GG);
  if (params.variant != ModelAVariant::GabidulinBeyond)
    throw Error(ErrorCode::InvalidParameter, "Gabidulin decoding needs variant GabidulinBeyond");
  validate_model_a(spec.field(), spec.k(), params);
  return decode_beyond(spec, &params, r, spec.k() - 1);
}

DecodeReport decode_gtg(const CodeSpec& spec, const ModelAParams& params, std::span<const Element> r) {
  require_family(spec, Family::GTG);
  if (params.variant != ModelAVariant::TwistedBeyond)
    throw Error(ErrorCode::InvalidParameter, "GTG decoding needs variant TwistedBeyond");
  validate_model_a(spec.field(), spec.k(), params);
  return decode_beyond(spec, &params, r, spec.k());
}

DecodeReport decode_agtg(const CodeSpec& spec, const ModelAParams& params, std::span<const Element> r) {
  require_family(spec, Family::AGTG);
  if (params.variant != ModelAVariant::TwistedBeyond)
    throw Error(ErrorCode::InvalidParameter, "AGTG decoding needs variant TwistedBeyond");
  validate_model_a(spec.field(), spec.k(), params);
  return decode_beyond(spec, &params, r, spec.k());
}

DecodeReport decode_unique(const CodeSpec& spec, std::span<const Element> r) {
  return decode_beyond(spec, nullptr, r, spec.twisted() ? spec.k() : spec.k() - 1);
}

DecodeReport decode_model_a(const CodeSpec& spec, const ModelAParams& params, std::span<const Element> r) {
  switch (spec.family()) {
    case Family::GG: return decode_gabidulin(spec, params, r);
    case Family::GTG: return decode_gtg(spec, params, r);
    case Family::AGTG: return decode_agtg(spec, params, r);
  }
  throw Error(ErrorCode::InvalidParameter, "unknown family");
}

DecodeReport decode_model_b_lowrate(const CodeSpec& spec, const ModelBParams& params, std::span<const Element> r) {
  const auto& f = spec.field();
  const int n = spec.n();
  const int k = spec.k();
  if (!spec.twisted()) throw Error(ErrorCode::InvalidParameter, "Model-B decoding needs a GTG or AGTG code");
  if (params.parity != model_b_params(f).parity)
    throw Error(ErrorCode::UnsupportedParity, "model B parity does not match n = " + std::to_string(n));
  if (k > model_b_capacity(n))
    throw Error(ErrorCode::CapacityExceeded, "k = " + std::to_string(k) + " exceeds the Model-B bound " +
                                                 std::to_string(model_b_capacity(n)) + " for n = " + std::to_string(n));
  if (static_cast<int>(r.size()) != n)
    throw Error(ErrorCode::LengthMismatch, "received word must have n = " + std::to_string(n) + " symbols");

  const Vec eta = eta_transform(spec, r);
  Vec z(static_cast<std::size_t>(n));
  for (int i = k + 1; i < n; ++i) z[static_cast<std::size_t>(i)] = eta[static_cast<std::size_t>(i)];
  for (int i = 1; i <= k; ++i) {
    const int src = n % 2 != 0 ? n - i : n - i - 1;
    z[static_cast<std::size_t>(i)] = f.frob(z[static_cast<std::size_t>(src)], n - src);
  }
  // eta_k - z_k = eps (eta_0 - z_0)^{Q}
  const Element m0 = spec.untwist_frobenius(f.div(f.sub(eta[static_cast<std::size_t>(k)], z[static_cast<std::size_t>(k)]),
                                                  spec.eps()));
  z[0] = f.sub(eta[0], m0);
  if (!model_b_relations_hold(f, z))
    throw DecodeError(ErrorCode::DecodeFailure, "recovered coefficients break the Model-B symmetry");

  LinearizedPoly poly(spec.field_ptr(), std::move(z));
  const auto e = evaluate_at_alphas(poly);
  Vec cw(r.size());
  for (std::size_t i = 0; i < cw.size(); ++i) cw[i] = f.sub(r[i], e[i]);
  auto msg = verify_codeword(spec, cw);
  if (!msg) throw DecodeError(ErrorCode::DecodeFailure, "re-encoding check failed");
  DecodeReport rep{std::move(*msg), std::move(poly), Branch::ModelBDirect, 0, {}};
  rep.t_used = rank(rep.error_poly);
  return rep;
}

}  // namespace rankcode
