// rankcode: setup | encode | corrupt | decode | simulate | selftest
//
// Documents are JSON; field elements are hex strings. --in/--out default to
// stdin/stdout. Randomness: encode --random uses make_rng(seed, 2*trial),
// corrupt uses make_rng(seed, 2*trial + 1), simulate trial i uses make_rng(seed, i).

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "rankcode/oracle.hpp"
#include "rankcode/serialize.hpp"

using namespace rankcode;

namespace {

Json read_json(const std::string& path, const char* what) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, std::string(what) + ": cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

void write_json(const std::string& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

struct SetupFlags {
  std::uint32_t p = 2;
  int l = 1, n = 6, s = 1, k = 3;
  std::string family = "GG";
  long long h = 0;
  std::string eps;
  bool random_eps = false;
  bool skip_norm_check = false;
  int q0exp = 0, u = 0;
  std::string model = "A";
  std::string variant;
  std::uint64_t seed = 0;
};

Json cmd_setup(const SetupFlags& fl) {
  FieldParams fp{fl.p, fl.l, fl.n, fl.s, fl.q0exp, fl.u, {}};
  FieldPtr field = FieldContext::create(fp);
  const Family family = family_from_string(fl.family);
  std::optional<ModelAParams> model_a;
  std::optional<ModelBParams> model_b;
  if (fl.model == "A") {
    const auto variant = !fl.variant.empty() ? variant_from_string(fl.variant)
                         : family == Family::GG ? ModelAVariant::GabidulinBeyond
                                                : ModelAVariant::TwistedBeyond;
    auto st = model_a_setup(field, fl.k, variant);
    field = st.field;
    model_a = st.params;
  } else if (fl.model == "B") {
    model_b = model_b_params(*field);
  } else if (fl.model != "none") {
    throw Error(ErrorCode::InvalidParameter, "--model must be A, B or none");
  }
  Element eps{};
  const NormCheck check = fl.skip_norm_check ? NormCheck::Skip : NormCheck::Enforce;
  if (family != Family::GG) {
    if (fl.random_eps) {
      Rng rng = make_rng(fl.seed, 0);
      bool found = false;
      for (int i = 0; i < 4096 && !found; ++i) {
        eps = field->random_nonzero(rng);
        found = check == NormCheck::Skip || twisted_norm_ok(*field, family, fl.k, eps);
      }
      if (!found)
        throw Error(ErrorCode::InvalidEpsilon,
                    "--random-eps: no eps with norm != (-1)^{nk} exists here (every nonzero norm is 1 over F_2)");
    } else if (!fl.eps.empty()) {
      eps = field->from_hex(fl.eps);
    } else {
      throw Error(ErrorCode::InvalidEpsilon, "--eps or --random-eps is required for twisted families");
    }
  }
  Setup s{CodeSpec::create(field, family, fl.k, fl.h, eps, check), model_a, model_b, fl.seed};
  if (model_a) validate_model_a(*field, fl.k, *model_a);
  return setup_to_json(s);
}

Json cmd_encode(const Setup& s, const Json& in, bool random, std::uint64_t trial) {
  const auto& f = s.spec.field();
  std::vector<Element> m;
  if (random) {
    Rng rng = make_rng(s.seed, 2 * trial);
    m.resize(static_cast<std::size_t>(s.spec.k()));
    for (auto& x : m) x = f.random(rng);
  } else {
    if (!in.contains("message")) throw Error(ErrorCode::ParseError, "message: missing");
    m = parse_hex_list(f, in.at("message"), "message");
  }
  Json out;
  out["message"] = hex_list(f, m);
  out["codeword"] = hex_list(f, encode(s.spec, m));
  return out;
}

Json cmd_corrupt(const Setup& s, const Json& in, int t, const std::string& source, std::uint64_t trial) {
  const auto& f = s.spec.field();
  if (!in.contains("codeword")) throw Error(ErrorCode::ParseError, "codeword: missing");
  const auto c = parse_hex_list(f, in.at("codeword"), "codeword");
  Rng rng = make_rng(s.seed, 2 * trial + 1);
  const std::string src = !source.empty() ? source : s.model_a ? "A" : s.model_b ? "B" : "unconstrained";
  ErrorPattern e = make_error_pattern(LinearizedPoly(s.field()));
  if (src == "A") {
    if (!s.model_a) throw Error(ErrorCode::InvalidParameter, "--source A needs a model A parameter document");
    e = sample_model_a_error(s.field(), *s.model_a, s.spec.k(), t, rng);
  } else if (src == "B") {
    if (!s.model_b) throw Error(ErrorCode::InvalidParameter, "--source B needs a model B parameter document");
    e = sample_model_b_error(s.field(), *s.model_b, rng);
  } else if (src == "unconstrained") {
    if (t > 0) e = sample_rank_t_error(s.field(), t, rng);
  } else {
    throw Error(ErrorCode::InvalidParameter, "--source must be A, B or unconstrained");
  }
  Json out = in;
  out["error"] = hex_list(f, e.vector);
  out["error_poly"] = hex_list(f, e.poly.coeffs());
  out["rank"] = e.rank;
  out["received"] = hex_list(f, apply_error(f, c, e.vector));
  return out;
}

ErrorSource source_from_string(const std::string& s) {
  if (s == "A") return ErrorSource::ModelA;
  if (s == "B") return ErrorSource::ModelB;
  if (s == "unconstrained") return ErrorSource::Unconstrained;
  if (s == "none") return ErrorSource::None;
  throw Error(ErrorCode::InvalidParameter, "--source must be A, B, unconstrained or none");
}

// Quick internal consistency run; prints one line per check.
bool cmd_selftest(std::ostream& out) {
  bool all = true;
  auto line = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << "\n";
    all = all && ok;
  };
  {
    auto f = FieldContext::create({2, 1, 4, 1, 0, 0, {}});
    int bad = 0;
    for (std::uint32_t r = 0; r < f->size(); ++r)
      for (std::uint32_t s = 0; s < f->size(); ++s)
        if (solve_quadratic(*f, {r}, {s}) != quad_roots_bruteforce(*f, {r}, {s})) ++bad;
    line("quadratic roots over F_16 match enumeration", bad == 0);
  }
  {
    auto f = FieldContext::create({3, 1, 3, 1, 0, 0, {}});
    Rng rng = make_rng(1, 0);
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      std::vector<Element> c(3);
      for (auto& x : c) x = f->random(rng);
      LinearizedPoly L(f, c);
      if (rank(L) != rank_bruteforce(L)) ++bad;
    }
    line("Dickson rank over F_27 matches kernel count", bad == 0);
  }
  {
    auto f = FieldContext::create({2, 1, 6, 1, 0, 0, {}});
    auto st = model_a_setup(f, 3, ModelAVariant::GabidulinBeyond);
    auto spec = CodeSpec::create(st.field, Family::GG, 3);
    auto s = summarize(run_trials_serial(SimConfig{spec, ErrorSource::ModelA, st.params, {}, 1, 20, 1}));
    line("GG n=6 k=3 rank-1 Model A errors decode", s.successes == 20);
  }
  {
    auto f = FieldContext::create({2, 1, 7, 1, 0, 0, {}});
    auto spec = CodeSpec::create(f, Family::GTG, 3, 1, Element{1}, NormCheck::Skip);
    auto s = summarize(run_trials_serial(SimConfig{spec, ErrorSource::ModelB, {}, model_b_params(*f), 0, 20, 1}));
    line("GTG n=7 k=3 Model B errors decode", s.successes == 20);
  }
  return all;
}

int run(int argc, char** argv) {
  CLI::App app{"Rank-metric coding toolkit: Gabidulin, twisted Gabidulin and additive twisted Gabidulin codes"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  std::string in_path, out_path, params_path;

  SetupFlags sf;
  auto* setup = app.add_subcommand("setup", "write a validated parameter document");
  setup->add_option("--p", sf.p, "characteristic")->required();
  setup->add_option("--l", sf.l, "q = p^l")->required();
  setup->add_option("--n", sf.n, "code length / extension degree")->required();
  setup->add_option("--s", sf.s, "Frobenius exponent, gcd(s, n) = 1");
  setup->add_option("--k", sf.k, "dimension")->required();
  setup->add_option("--family", sf.family, "GG | GTG | AGTG")->required();
  setup->add_option("--h", sf.h, "twist exponent");
  setup->add_option("--eps", sf.eps, "twist coefficient (hex)");
  setup->add_flag("--random-eps", sf.random_eps, "sample eps until the norm condition holds");
  setup->add_flag("--skip-norm-check", sf.skip_norm_check, "accept eps whose norm is (-1)^{nk}; the code need not be MRD");
  setup->add_option("--q0exp", sf.q0exp, "q0 = p^q0exp (AGTG)");
  setup->add_option("--u", sf.u, "q = q0^u (AGTG)");
  setup->add_option("--model", sf.model, "A | B | none");
  setup->add_option("--variant", sf.variant, "GabidulinBeyond | TwistedBeyond");
  setup->add_option("--seed", sf.seed, "master seed");
  setup->add_option("--out", out_path);

  bool random_msg = false;
  std::uint64_t trial = 0;
  auto* enc = app.add_subcommand("encode", "encode a message");
  enc->add_option("--params", params_path)->required();
  enc->add_option("--in", in_path, "document with \"message\"");
  enc->add_option("--out", out_path);
  enc->add_flag("--random", random_msg, "draw a random message from the seed");
  enc->add_option("--trial", trial, "random stream index");

  int t = 0;
  std::string source;
  auto* cor = app.add_subcommand("corrupt", "add a model-sampled error to a codeword");
  cor->add_option("--params", params_path)->required();
  cor->add_option("--in", in_path, "document with \"codeword\"");
  cor->add_option("--out", out_path);
  cor->add_option("--t", t, "error rank (model A / unconstrained)");
  cor->add_option("--source", source, "A | B | unconstrained (default: the document's model)");
  cor->add_option("--trial", trial, "random stream index");

  bool verbose = false;
  auto* dec = app.add_subcommand("decode", "decode a received word");
  dec->add_option("--params", params_path)->required();
  dec->add_option("--in", in_path, "document with \"received\"");
  dec->add_option("--out", out_path);
  dec->add_flag("--verbose", verbose, "include the decoder trace");

  int trials = 100;
  std::string format = "json";
  bool timing = false, serial = false;
  std::optional<std::uint64_t> seed_override;
  auto* sim = app.add_subcommand("simulate", "Monte-Carlo decoding statistics");
  sim->add_option("--params", params_path)->required();
  sim->add_option("--trials", trials);
  sim->add_option("--t", t);
  sim->add_option("--source", source, "A | B | unconstrained | none (default: the document's model)");
  sim->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  sim->add_option("--seed", seed_override, "override the document seed");
  sim->add_flag("--timing", timing, "add mean_decode_micros (not reproducible)");
  sim->add_flag("--serial", serial, "run trials on one thread");
  sim->add_option("--out", out_path);

  auto* self = app.add_subcommand("selftest", "quick internal consistency checks");

  CLI11_PARSE(app, argc, argv);

  if (*self) return cmd_selftest(std::cout) ? 0 : 1;
  if (*setup) {
    write_json(out_path, cmd_setup(sf));
    return 0;
  }
  Setup s = setup_from_json(read_json(params_path, "params"));
  if (*enc) {
    const Json in = random_msg ? Json::object() : read_json(in_path, "input");
    write_json(out_path, cmd_encode(s, in, random_msg, trial));
  } else if (*cor) {
    write_json(out_path, cmd_corrupt(s, read_json(in_path, "input"), t, source, trial));
  } else if (*dec) {
    const Json in = read_json(in_path, "input");
    if (!in.contains("received")) throw Error(ErrorCode::ParseError, "received: missing");
    const auto r = parse_hex_list(s.spec.field(), in.at("received"), "received");
    try {
      const SimConfig cfg = s.sim_config(ErrorSource::None, 0, 0);
      write_json(out_path, report_to_json(s.spec.field(), decode_configured(cfg, r), verbose));
    } catch (const DecodeError& e) {
      write_json(out_path, decode_error_to_json(s.spec.field(), e));
      return 2;
    }
  } else if (*sim) {
    if (seed_override) s.seed = *seed_override;
    ErrorSource src = !source.empty() ? source_from_string(source)
                      : s.model_a     ? ErrorSource::ModelA
                      : s.model_b     ? ErrorSource::ModelB
                                      : ErrorSource::Unconstrained;
    const SimConfig cfg = s.sim_config(src, t, trials);
    const auto results = serial ? run_trials_serial(cfg) : run_trials_parallel(cfg);
    const auto stats = summarize(results);
    write_text(out_path, format == "csv" ? stats_to_csv(stats, timing) : stats_to_json(stats, timing).dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
