#pragma once

// JSON serialization for the exchange formats: schemes and certificates
// round-trip (with validation on load); reports serialize one way for the
// CLI.  Ordered maps keep output byte-stable.

#include <json.hpp>

#include "gcay/bounds.hpp"
#include "gcay/cayley.hpp"
#include "gcay/primes.hpp"
#include "gcay/scheme.hpp"

namespace gcay::io {

using json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline json alpha_to_json(const modmath::AlphaCertificate& c) {
  return json{{"p", c.p},
              {"a", c.a},
              {"s", c.s},
              {"alpha", c.alpha},
              {"checks",
               json{{"i", c.checks.order10},
                    {"ii", c.checks.units_minus},
                    {"iii", c.checks.units_plus},
                    {"iv", c.checks.half_negates}}}};
}

inline json monomial_to_json(scheme::Monomial m) { return json{{"m", m.m}, {"e", m.e}}; }

inline scheme::Monomial monomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("e"))
    throw ParseError("monomial must be an object with fields m and e");
  int m = j.at("m").get<int>();
  int e = j.at("e").get<int>();
  if (m < -2 || m > 2) throw ParseError("monomial coefficient out of range [-2, 2]");
  if (e < 0 || e > 4) throw ParseError("monomial exponent out of range [0, 4]");
  scheme::Monomial out = scheme::mono(m, e);
  if (out.m != m || out.e != e) throw ParseError("monomial is not normalized");
  return out;
}

inline json delta_to_json(groups::DeltaElement d) { return json::array({d.x0, d.x1, d.i}); }

inline groups::DeltaElement delta_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("delta element must be a 3-array");
  u32 x0 = j.at(0).get<u32>(), x1 = j.at(1).get<u32>(), i = j.at(2).get<u32>();
  if (x0 > 9 || x1 > 9 || i > 1) throw ParseError("delta element out of range");
  return {x0, x1, i};
}

inline json scheme_to_json(const scheme::GeneratorScheme& s) {
  json fams = json::array();
  for (const auto& f : s.families)
    fams.push_back(json{{"c0", monomial_to_json(f.c0)},
                        {"c1", monomial_to_json(f.c1)},
                        {"s", delta_to_json(f.s)}});
  return json{{"k", 10}, {"alphabet", scheme::alphabet_name(s.alphabet)}, {"families", fams}};
}

inline scheme::GeneratorScheme scheme_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("scheme must be a JSON object");
  if (!j.contains("k") || j.at("k").get<int>() != 10) throw ParseError("scheme must have k = 10");
  std::string alpha = j.value("alphabet", "basic");
  scheme::GeneratorScheme out;
  if (alpha == "basic") out.alphabet = scheme::Alphabet::basic;
  else if (alpha == "extended") out.alphabet = scheme::Alphabet::extended;
  else throw ParseError("unknown alphabet: " + alpha);
  if (!j.contains("families") || !j.at("families").is_array() || j.at("families").size() != 9)
    throw ParseError("scheme must list exactly 9 families");
  for (size_t i = 0; i < 9; ++i) {
    const json& f = j.at("families").at(i);
    out.families[i].c0 = monomial_from_json(f.at("c0"));
    out.families[i].c1 = monomial_from_json(f.at("c1"));
    out.families[i].s = delta_from_json(f.at("s"));
    if (groups::delta_is_identity(out.families[i].s))
      throw ParseError("family " + std::to_string(i) + " has the identity Delta part");
  }
  return out;
}

inline json certificate_to_json(const scheme::DiameterCertificate& c) {
  json entries = json::array();
  for (const auto& e : c.entries) {
    json det = json::array();
    for (int t = 0; t < e.det.size; ++t) det.push_back(monomial_to_json(e.det.terms[size_t(t)]));
    entries.push_back(json{{"s", delta_to_json(e.s)},
                           {"left", json{{"family", e.left.family}, {"inv", e.left.inv}}},
                           {"right", json{{"family", e.right.family}, {"inv", e.right.inv}}},
                           {"det", det},
                           {"class", scheme::lambda_class_name(e.cls)}});
  }
  return json{{"entries", entries}};
}

inline scheme::DiameterCertificate certificate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries") || !j.at("entries").is_array())
    throw ParseError("certificate must be an object with an entries array");
  scheme::DiameterCertificate out;
  for (const json& je : j.at("entries")) {
    scheme::CertificateEntry e;
    e.s = delta_from_json(je.at("s"));
    auto ref = [&](const json& r) -> scheme::FormRef {
      int fam = r.at("family").get<int>();
      if (fam < 0 || fam > 8) throw ParseError("form family out of range");
      return {fam, r.at("inv").get<bool>()};
    };
    e.left = ref(je.at("left"));
    e.right = ref(je.at("right"));
    const json& jd = je.at("det");
    if (!jd.is_array() || jd.size() > 2) throw ParseError("determinant must have at most 2 terms");
    scheme::Monomial terms[2] = {{0, 0}, {0, 0}};
    for (size_t t = 0; t < jd.size(); ++t) terms[t] = monomial_from_json(jd.at(t));
    e.det = scheme::SymbolicSum::of(terms[0], terms[1]);
    std::string cls = je.at("class").get<std::string>();
    if (cls == "L1") e.cls = scheme::LambdaClass::L1;
    else if (cls == "L2") e.cls = scheme::LambdaClass::L2;
    else throw ParseError("unknown Lambda class: " + cls);
    out.entries.push_back(e);
  }
  return out;
}

inline json audit_to_json(const primes::AuditReport& r) {
  auto pair_json = [](const std::pair<u64, u64>& p) { return json::array({p.first, p.second}); };
  json viols = json::array();
  for (const auto& v : r.violations) viols.push_back(pair_json(v));
  json out{{"lo", r.lo}, {"hi", r.hi}, {"delta", r.delta}, {"checked_pairs", r.checked_pairs}};
  if (r.worst_pair) {
    u64 g = std::gcd(r.worst_pair->second, r.worst_pair->first);
    out["worst_pair"] = pair_json(*r.worst_pair);
    out["max_ratio"] = std::to_string(r.worst_pair->second / g) + "/" + std::to_string(r.worst_pair->first / g);
  } else {
    out["worst_pair"] = nullptr;
    out["max_ratio"] = nullptr;
  }
  out["violations"] = viols;
  return out;
}

inline json bound_to_json(const bounds::BoundReport& r) {
  return json{{"d", r.d},
              {"n", r.n},
              {"r", r.r},
              {"p", r.p},
              {"d_prime", r.d_prime},
              {"order", to_string_u128(r.order)},
              {"ratio", to_string_u128(r.ratio_num) + "/" + to_string_u128(r.ratio_den)},
              {"ratio_dec", r.ratio_decimal(6)},
              {"guaranteed", r.guaranteed}};
}

inline json verdict_to_json(const cayley::DiameterVerdict& v) {
  json out{{"order", v.order},
           {"degree", v.degree},
           {"diameter2", v.diameter2},
           {"method", cayley::method_name(v.method)},
           {"levels", v.levels}};
  if (v.witness) out["witness"] = *v.witness;
  if (v.method == cayley::VerifyMethod::both) out["methods_agree"] = v.methods_agree;
  return out;
}

inline json bfs_to_json(const cayley::BfsReport& r) {
  return json{{"source", r.source},
              {"levels", r.level_sizes},
              {"eccentricity", r.eccentricity},
              {"reached", r.reached}};
}

inline json constants_to_json(const primes::ConstantsReport& r) {
  return json{{"k", r.input.k},
              {"phi_k", r.input.phi_k},
              {"epsilon", r.input.epsilon},
              {"delta", r.input.delta},
              {"gamma", r.input.gamma},
              {"thresholds",
               json{{"audited", r.input.x_audited},
                    {"effective", r.input.x_effective},
                    {"verified", r.input.x_verified}}},
              {"delta_min", r.delta_min},
              {"regime2_threshold", r.regime2_threshold},
              {"margin_at_effective", r.margin_at_effective},
              {"delta_ok", r.delta_ok},
              {"threshold_ok", r.threshold_ok}};
}

inline json interval_to_json(const primes::IntervalGuarantee& g) {
  json out{{"x", g.x}, {"regime", primes::regime_name(g.regime)}};
  if (g.regime != primes::Regime::none) {
    out["lo"] = g.lo;
    out["hi"] = g.hi;
  }
  return out;
}

inline json lambda_to_json(const modmath::LambdaSet& ls) {
  return json{{"p", ls.p}, {"alpha", ls.alpha}, {"size", ls.elements.size()}, {"elements", ls.elements}};
}

}  // namespace gcay::io
