#include "rankcode/serialize.hpp"

#include <sstream>

namespace rankcode {

namespace {

template <class T>
T field_or(const Json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw Error(ErrorCode::ParseError, std::string(key) + ": wrong type");
  }
}

template <class T>
T required(const Json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string(key) + ": missing");
  return field_or<T>(j, key, T{});
}

std::string_view norm_check_name(bool checked) { return checked ? "enforce" : "skip"; }

}  // namespace

SimConfig Setup::sim_config(ErrorSource source, int t, int trials) const {
  return SimConfig{spec, source, model_a, model_b, t, trials, seed};
}

Json hex_list(const FieldContext& f, std::span<const Element> v) {
  Json out = Json::array();
  for (Element x : v) out.push_back(f.to_hex(x));
  return out;
}

std::vector<Element> parse_hex_list(const FieldContext& f, const Json& j, const std::string& what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, what + ": expected an array of hex strings");
  std::vector<Element> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(ErrorCode::ParseError, what + ": expected an array of hex strings");
    try {
      out.push_back(f.from_hex(e.get<std::string>()));
    } catch (const Error& err) {
      throw Error(ErrorCode::ParseError, what + ": " + err.what());
    }
  }
  return out;
}

Json setup_to_json(const Setup& s) {
  const auto& f = s.spec.field();
  Json j;
  j["p"] = f.p();
  j["l"] = f.l();
  j["n"] = f.n();
  j["s"] = f.s();
  j["k"] = s.spec.k();
  j["family"] = std::string(to_string(s.spec.family()));
  j["h"] = s.spec.h();
  j["eps"] = s.spec.twisted() ? Json(f.to_hex(s.spec.eps())) : Json(nullptr);
  j["norm_check"] = std::string(norm_check_name(s.spec.norm_checked()));
  j["l0"] = f.l0();
  j["u"] = f.u();
  j["modulus"] = f.modulus();
  Json model;
  if (s.model_a) {
    model["type"] = "A";
    model["theta1"] = s.model_a->theta1;
    model["theta2"] = s.model_a->theta2;
    model["variant"] = std::string(to_string(s.model_a->variant));
  } else if (s.model_b) {
    model["type"] = "B";
    model["parity"] = std::string(to_string(s.model_b->parity));
  } else {
    model["type"] = "none";
  }
  j["model"] = model;
  j["alphas"] = hex_list(f, f.alphas());
  j["seed"] = s.seed;
  return j;
}

Setup setup_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "parameter document must be a JSON object");
  FieldParams fp;
  fp.p = required<std::uint32_t>(j, "p");
  fp.l = required<int>(j, "l");
  fp.n = required<int>(j, "n");
  fp.s = field_or<int>(j, "s", 1);
  fp.l0 = field_or<int>(j, "l0", 0);
  fp.u = field_or<int>(j, "u", 0);
  fp.modulus = field_or<std::vector<std::uint32_t>>(j, "modulus", {});
  FieldPtr field = FieldContext::create(fp);
  if (j.contains("alphas") && !j.at("alphas").is_null())
    field = field->with_alphas(parse_hex_list(*field, j.at("alphas"), "alphas"));

  const Family family = family_from_string(required<std::string>(j, "family"));
  const int k = required<int>(j, "k");
  const auto h = field_or<long long>(j, "h", 0);
  Element eps{};
  if (family != Family::GG) {
    const auto e = field_or<std::string>(j, "eps", "");
    if (e.empty()) throw Error(ErrorCode::InvalidEpsilon, "eps: missing for a twisted family");
    eps = field->from_hex(e);
  }
  const auto nc = field_or<std::string>(j, "norm_check", "enforce");
  if (nc != "enforce" && nc != "skip") throw Error(ErrorCode::ParseError, "norm_check: must be enforce or skip");
  Setup s{CodeSpec::create(field, family, k, h, eps, nc == "skip" ? NormCheck::Skip : NormCheck::Enforce), {}, {},
          field_or<std::uint64_t>(j, "seed", 0)};

  const Json model = j.contains("model") ? j.at("model") : Json::object();
  const auto type = field_or<std::string>(model, "type", "none");
  if (type == "A") {
    ModelAParams pa;
    pa.theta1 = required<int>(model, "theta1");
    pa.theta2 = required<int>(model, "theta2");
    pa.variant = variant_from_string(required<std::string>(model, "variant"));
    validate_model_a(*field, k, pa);
    s.model_a = pa;
  } else if (type == "B") {
    ModelBParams pb = model_b_params(*field);
    if (model.contains("parity") && field_or<std::string>(model, "parity", "") != to_string(pb.parity))
      throw Error(ErrorCode::UnsupportedParity, "model.parity does not match n");
    s.model_b = pb;
  } else if (type != "none") {
    throw Error(ErrorCode::ParseError, "model.type must be A, B or none");
  }
  return s;
}

Json report_to_json(const FieldContext& f, const DecodeReport& rep, bool verbose) {
  Json j;
  j["message"] = hex_list(f, rep.message);
  j["error_poly"] = hex_list(f, rep.error_poly.coeffs());
  j["branch"] = std::string(to_string(rep.branch));
  j["t_used"] = rep.t_used;
  if (!verbose) return j;
  Json tr;
  tr["gamma"] = hex_list(f, rep.trace.gamma);
  tr["gamma_prime"] = hex_list(f, rep.trace.gamma_prime);
  if (rep.trace.chain) {
    const auto& c = *rep.trace.chain;
    tr["delta"] = hex_list(f, c.delta);
    tr["tau"] = hex_list(f, c.tau);
    tr["a"] = hex_list(f, c.a);
    tr["u"] = hex_list(f, c.u);
    tr["mu"] = hex_list(f, c.mu);
    tr["nu"] = hex_list(f, c.nu);
  }
  Json cands = Json::array();
  for (const auto& c : rep.trace.x_candidates)
    cands.push_back({{"x", f.to_hex(c.x)}, {"source", std::string(to_string(c.source))}, {"verified", c.verified}});
  tr["x_candidates"] = cands;
  tr["x_chosen"] = rep.trace.x_chosen ? Json(f.to_hex(*rep.trace.x_chosen)) : Json(nullptr);
  j["trace"] = tr;
  return j;
}

Json decode_error_to_json(const FieldContext& f, const DecodeError& e) {
  Json j;
  j["error"] = std::string(to_string(e.code()));
  j["detail"] = e.what();
  Json cands = Json::array();
  for (const auto& c : e.candidates())
    cands.push_back({{"x", f.to_hex(c.x)}, {"source", std::string(to_string(c.source))}, {"verified", c.verified}});
  j["candidates"] = cands;
  return j;
}

Json stats_to_json(const SimStats& s, bool timing) {
  Json j;
  j["trials"] = s.trials;
  j["successes"] = s.successes;
  j["failures"] = s.failures;
  j["ambiguous"] = s.ambiguous;
  Json hist = Json::object();
  for (const auto& [k, v] : s.branch_histogram) hist[k] = v;
  j["branch_histogram"] = hist;
  if (timing) j["mean_decode_micros"] = s.mean_decode_micros;
  return j;
}

std::string stats_to_csv(const SimStats& s, bool timing) {
  std::ostringstream out;
  out << "trials,successes,failures,ambiguous,case1,case2,model_b_direct";
  if (timing) out << ",mean_decode_micros";
  out << "\n";
  auto hist = [&](const char* k) {
    auto it = s.branch_histogram.find(k);
    return it == s.branch_histogram.end() ? 0 : it->second;
  };
  out << s.trials << ',' << s.successes << ',' << s.failures << ',' << s.ambiguous << ',' << hist("Case1") << ','
      << hist("Case2") << ',' << hist("ModelBDirect");
  if (timing) out << ',' << s.mean_decode_micros;
  out << "\n";
  return out.str();
}

}  // namespace rankcode
