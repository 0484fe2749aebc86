// One line per criterion: "criterion N: PASS|FAIL  <detail>".
// Indented "note:" lines are supplementary runs; they never decide a verdict.
// Exit status is 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "rankcode/decoders.hpp"
#include "rankcode/oracle.hpp"
#include "rankcode/simulate.hpp"

using namespace rankcode;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
  std::vector<std::string> notes;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

FieldPtr make_field(std::uint32_t p, int l, int n, int l0 = 0, int u = 0) {
  FieldParams fp;
  fp.p = p;
  fp.l = l;
  fp.n = n;
  fp.l0 = l0;
  fp.u = u;
  return FieldContext::create(fp);
}

Element pick_eps(const FieldContext& f, Family fam, int k, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  for (int i = 0; i < 100000; ++i) {
    const Element e = f.random_nonzero(rng);
    if (twisted_norm_ok(f, fam, k, e)) return e;
  }
  throw Error(ErrorCode::InvalidEpsilon, "no admissible eps found");
}

// number of nonzero eps passing the norm condition
std::uint64_t admissible_eps_count(const FieldContext& f, Family fam, int k) {
  std::uint64_t c = 0;
  for (std::uint64_t v = 1; v < f.size(); ++v) c += twisted_norm_ok(f, fam, k, f.from_packed(v));
  return c;
}

SimStats run_model_a(const CodeSpec& spec, const ModelAParams& pa, int t, int trials, std::uint64_t seed) {
  SimConfig cfg{spec};
  cfg.source = ErrorSource::ModelA;
  cfg.model_a = pa;
  cfg.t = t;
  cfg.trials = trials;
  cfg.seed = seed;
  return summarize(run_trials_parallel(cfg));
}

int hist(const SimStats& s, const char* k) {
  auto it = s.branch_histogram.find(k);
  return it == s.branch_histogram.end() ? 0 : it->second;
}

std::string describe(const SimStats& s) {
  return fmt("%d/%d recovered, failures=%d, ambiguous=%d, Case1=%d, Case2=%d, ModelBDirect=%d", s.successes,
             s.trials, s.failures, s.ambiguous, hist(s, "Case1"), hist(s, "Case2"), hist(s, "ModelBDirect"));
}

Verdict criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  auto st = model_a_setup(make_field(2, 1, 6), 3, ModelAVariant::GabidulinBeyond);
  const auto spec = CodeSpec::create(st.field, Family::GG, 3);
  const auto s = run_model_a(spec, st.params, 2, 200, 1001);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = s.successes == 200 && s.ambiguous == 0 && secs < 30.0;
  Verdict v{ok, describe(s) + fmt(", %.2f s", secs), {}};
  if (s.ambiguous > 0)
    v.notes.push_back("every non-recovered trial is DecodeAmbiguous: two distinct rank-2 errors satisfying "
                      "both model constraints explain the received word (see test_decoders brute-force check)");
  return v;
}

Verdict criterion2() {
  auto st = model_a_setup(make_field(3, 1, 4), 1, ModelAVariant::GabidulinBeyond);
  const auto& f = *st.field;
  const auto spec = CodeSpec::create(st.field, Family::GG, 1);
  int ok = 0, amb = 0, fail = 0, quad = 0;
  for (int i = 0; i < 100; ++i) {
    Rng rng = make_rng(1002, static_cast<std::uint64_t>(i));
    const std::vector<Element> m{f.random(rng)};
    const auto e = sample_model_a_error(st.field, st.params, 1, 2, rng);
    const auto r = apply_error(f, encode(spec, m), e.vector);
    try {
      const auto rep = decode_gabidulin(spec, st.params, r);
      for (const auto& c : rep.trace.x_candidates)
        if (c.source == XSource::Quadratic) {
          ++quad;
          break;
        }
      ok += rep.message == m;
      fail += rep.message != m;
    } catch (const DecodeError& err) {
      (err.code() == ErrorCode::DecodeAmbiguous ? amb : fail)++;
    }
  }
  Verdict v{ok == 100 && quad > 0,
            fmt("%d/100 recovered, failures=%d, ambiguous=%d, quadratic-root branch used on %d trials", ok, fail, amb,
                quad),
            {}};
  if (amb > 0) v.notes.push_back("non-recovered trials are genuine ties between two admissible rank-2 errors");
  return v;
}

Verdict criterion3() {
  auto st = model_a_setup(make_field(2, 1, 8), 2, ModelAVariant::TwistedBeyond);
  const auto& f = *st.field;
  const std::uint64_t admissible = admissible_eps_count(f, Family::GTG, 2);
  Verdict v{false, "", {}};
  if (admissible == 0) {
    v.detail = fmt("no admissible eps over F_2 (0 of %llu nonzero elements pass the norm condition); "
                   "code cannot be constructed",
                   static_cast<unsigned long long>(f.size() - 1));
  } else {
    const auto spec = CodeSpec::create(st.field, Family::GTG, 2, 1, pick_eps(f, Family::GTG, 2, 3));
    const auto s = run_model_a(spec, st.params, 3, 100, 1003);
    v.pass = s.successes == 100 && hist(s, "Case2") == 100;
    v.detail = describe(s);
  }
  {
    Rng rng = make_rng(3);
    const auto spec =
        CodeSpec::create(st.field, Family::GTG, 2, 1, f.random_nonzero(rng), NormCheck::Skip);
    v.notes.push_back("same parameters, norm check skipped: " + describe(run_model_a(spec, st.params, 3, 100, 1003)));
  }
  {
    auto s4 = model_a_setup(make_field(2, 2, 8), 2, ModelAVariant::TwistedBeyond);
    const auto spec = CodeSpec::create(s4.field, Family::GTG, 2, 1, pick_eps(*s4.field, Family::GTG, 2, 3));
    v.notes.push_back("q=4, n=8, k=2, t=3, validated eps: " + describe(run_model_a(spec, s4.params, 3, 100, 1003)));
  }
  return v;
}

Verdict criterion4() {
  // q = 4, q0 = 2, u = 2
  auto st = model_a_setup(make_field(2, 2, 6, 1, 2), 2, ModelAVariant::TwistedBeyond);
  const auto& f = *st.field;
  Verdict v{false, "", {}};
  if (admissible_eps_count(f, Family::AGTG, 2) == 0) {
    v.detail = "no admissible eps with q0=2 (every nonzero norm into F_2 is 1 = (-1)^{nk}); code cannot be constructed";
  } else {
    const auto spec = CodeSpec::create(st.field, Family::AGTG, 2, 1, pick_eps(f, Family::AGTG, 2, 4));
    const auto s = run_model_a(spec, st.params, 2, 100, 1004);
    v.pass = s.successes == 100;
    v.detail = describe(s);
  }
  {
    Rng rng = make_rng(4);
    const auto spec = CodeSpec::create(st.field, Family::AGTG, 2, 1, f.random_nonzero(rng), NormCheck::Skip);
    v.notes.push_back("same parameters, norm check skipped: " + describe(run_model_a(spec, st.params, 2, 100, 1004)));
  }
  {
    // q0 = 4, u = 2 needs q = 16; n = 6 would exceed the field table limit, so n = 4
    auto s16 = model_a_setup(make_field(2, 4, 4, 2, 2), 2, ModelAVariant::TwistedBeyond);
    const auto spec = CodeSpec::create(s16.field, Family::AGTG, 2, 1, pick_eps(*s16.field, Family::AGTG, 2, 4));
    v.notes.push_back("q=16, q0=4, u=2, n=4, k=2, t=1, validated eps: " +
                      describe(run_model_a(spec, s16.params, 1, 100, 1004)));
  }
  {
    // u = 1 vs GTG on shared trials, q = q0 = 4
    auto s1 = model_a_setup(make_field(2, 2, 6, 2, 1), 2, ModelAVariant::TwistedBeyond);
    const auto& g = *s1.field;
    const Element eps = pick_eps(g, Family::GTG, 2, 5);
    const auto gtg = CodeSpec::create(s1.field, Family::GTG, 2, 1, eps);
    const auto agtg = CodeSpec::create(s1.field, Family::AGTG, 2, 1, eps);
    int agree = 0, recovered = 0;
    for (int i = 0; i < 50; ++i) {
      Rng rng = make_rng(1005, static_cast<std::uint64_t>(i));
      const std::vector<Element> m{g.random(rng), g.random(rng)};
      const auto e = sample_model_a_error(s1.field, s1.params, 2, 2, rng);
      const auto r = apply_error(g, encode(gtg, m), e.vector);
      try {
        const auto a = decode_gtg(gtg, s1.params, r);
        const auto b = decode_agtg(agtg, s1.params, r);
        agree += a.message == b.message && a.error_poly == b.error_poly && a.branch == b.branch;
        recovered += a.message == m;
      } catch (const DecodeError&) {
      }
    }
    v.notes.push_back(fmt("AGTG u=1 vs GTG at q=4, n=6, k=2, t=2: %d/50 identical outputs, %d/50 recovered", agree,
                          recovered));
  }
  return v;
}

Verdict criterion5() {
  std::string detail;
  bool ok = true;
  for (int n : {7, 8}) {
    // q = 4: over F_2 no eps is admissible
    auto f = make_field(2, 2, n);
    const auto spec = CodeSpec::create(f, Family::GTG, 3, 1, pick_eps(*f, Family::GTG, 3, 6));
    SimConfig cfg{spec};
    cfg.source = ErrorSource::ModelB;
    cfg.model_b = model_b_params(*f);
    cfg.trials = 200;
    cfg.seed = 1006;
    const auto res = run_trials_parallel(cfg);
    const auto s = summarize(res);
    int lo = n, hi = 0;
    for (const auto& r : res) {
      lo = std::min(lo, r.error_rank);
      hi = std::max(hi, r.error_rank);
    }
    ok &= s.successes == 200;
    detail += fmt("n=%d (q=4): %d/200 recovered, error rank %d..%d; ", n, s.successes, lo, hi);
  }
  return {ok, detail, {}};
}

Verdict criterion6() {
  auto st = model_a_setup(make_field(2, 1, 8), 3, ModelAVariant::GabidulinBeyond);
  const auto spec = CodeSpec::create(st.field, Family::GG, 3);
  int ok = 0, case1 = 0;
  for (int i = 0; i < 200; ++i) {
    Rng rng = make_rng(1007, static_cast<std::uint64_t>(i));
    const int t = i % 3;
    std::vector<Element> m(3);
    for (auto& x : m) x = st.field->random(rng);
    const auto e = sample_rank_t_error(st.field, t, rng);
    const auto r = apply_error(*st.field, encode(spec, m), e.vector);
    try {
      const auto rep = decode_gabidulin(spec, st.params, r);
      ok += rep.message == m;
      case1 += rep.branch == Branch::Case1;
    } catch (const DecodeError&) {
    }
  }
  return {ok == 200 && case1 == 200, fmt("%d/200 recovered, Case1 on %d, t in {0,1,2}", ok, case1), {}};
}

Verdict criterion7() {
  auto st = model_a_setup(make_field(2, 1, 4), 1, ModelAVariant::GabidulinBeyond);
  const auto spec = CodeSpec::create(st.field, Family::GG, 1);
  int unique = 0, match = 0;
  for (int i = 0; i < 200; ++i) {
    Rng rng = make_rng(1008, static_cast<std::uint64_t>(i));
    const std::vector<Element> m{st.field->random(rng)};
    const auto e = sample_model_a_error(st.field, st.params, 1, 2, rng);
    const auto r = apply_error(*st.field, encode(spec, m), e.vector);
    const auto near = nearest_codeword_bruteforce(spec, r);
    if (!near.unique) continue;
    ++unique;
    try {
      match += encode(spec, decode_gabidulin(spec, st.params, r).message) == near.codeword;
    } catch (const DecodeError&) {
    }
  }
  return {unique > 0 && match == unique, fmt("%d/%d unique-minimizer trials agree with the oracle", match, unique), {}};
}

Verdict criterion8() {
  long mismatches = 0, total = 0;
  for (auto f : {make_field(2, 1, 6), make_field(3, 1, 4)})
    for (std::uint64_t r = 0; r < f->size(); ++r)
      for (std::uint64_t s = 0; s < f->size(); ++s) {
        const Element a = f->from_packed(r), b = f->from_packed(s);
        mismatches += solve_quadratic(*f, a, b) != quad_roots_bruteforce(*f, a, b);
        ++total;
      }
  return {mismatches == 0, fmt("%ld mismatches over %ld (r, s) pairs in F_64 and F_81", mismatches, total), {}};
}

Verdict criterion9() {
  long mismatches = 0;
  for (auto f : {make_field(2, 1, 4), make_field(3, 1, 4)}) {
    Rng rng = make_rng(1009);
    for (int i = 0; i < 1000; ++i) {
      LinearizedPoly L(f);
      // mix of full-random and low-rank polynomials
      if (i % 2 == 0) {
        for (int j = 0; j < 4; ++j) L.set_coeff(j, f->random(rng));
      } else {
        L = random_rank_t(f, static_cast<int>(rng() % 5), rng);
      }
      const int a = rank(L), b = rank_bruteforce(L), c = fq_matrix_rank(*f, to_fq_matrix(L));
      mismatches += !(a == b && b == c);
    }
  }
  auto f = make_field(2, 1, 6);
  Rng rng = make_rng(1010);
  long singular = 0;
  for (int i = 0; i < 100; ++i) {
    const int t = 1 + static_cast<int>(rng() % 5);
    const auto D = dickson_matrix(random_rank_t(f, t, rng));
    for (int r0 = 0; r0 < 6; ++r0)
      for (int c0 = 0; c0 < 6; ++c0) {
        ExtMatrix sub(static_cast<std::size_t>(t), static_cast<std::size_t>(t));
        for (int a = 0; a < t; ++a)
          for (int b = 0; b < t; ++b)
            sub(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) =
                D(static_cast<std::size_t>((r0 + a) % 6), static_cast<std::size_t>((c0 + b) % 6));
        singular += matrix_rank(f->ext_ops(), sub) != static_cast<std::size_t>(t);
      }
  }
  return {mismatches == 0 && singular == 0,
          fmt("%ld rank mismatches over 2000 polynomials; %ld singular consecutive t x t minors over 100 rank-t "
              "instances in F_64",
              mismatches, singular),
          {}};
}

Verdict criterion10() {
  std::string detail;
  bool ok = true;
  auto check = [&](const char* label, const CodeSpec& spec) {
    const int d = min_codeword_rank_bruteforce(spec);
    const bool good = d >= 4 - spec.k() + 1;
    ok &= good;
    detail += fmt("%s k=%d d=%d; ", label, spec.k(), d);
  };
  auto f2 = make_field(2, 1, 4);
  for (int k : {1, 2}) check("GG q=2", CodeSpec::create(f2, Family::GG, k));
  // F_2 admits no eps; q = 4 for GTG, q0 = 4 for AGTG
  auto f4 = make_field(2, 2, 4);
  for (int k : {1, 2}) check("GTG q=4", CodeSpec::create(f4, Family::GTG, k, 1, pick_eps(*f4, Family::GTG, k, 10)));
  auto f4u1 = make_field(2, 2, 4, 2, 1);
  for (int k : {1, 2})
    check("AGTG q=4 q0=4", CodeSpec::create(f4u1, Family::AGTG, k, 1, pick_eps(*f4u1, Family::AGTG, k, 10)));
  auto f16 = make_field(2, 4, 4, 2, 2);
  check("AGTG q=16 q0=4", CodeSpec::create(f16, Family::AGTG, 1, 1, pick_eps(*f16, Family::AGTG, 1, 10)));
  return {ok, detail, {}};
}

}  // namespace

int main() {
  const std::vector<std::function<Verdict()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v{false, "", {}};
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v.detail = std::string("exception: ") + e.what();
    }
    failed += !v.pass;
    std::printf("criterion %zu: %s  %s\n", i + 1, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    for (const auto& n : v.notes) std::printf("    note: %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
