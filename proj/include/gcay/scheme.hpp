#pragma once

// Generator schemes: nine one-parameter families x -> (c0 x, c1 x; s) whose
// 18 forms (families and their inverses) expand to the connection set X of
// the Cayley graph.  Coefficients are monomials m * alpha^e kept in symbolic
// form, so pair determinants can be classified against Lambda once and reused
// for every modulus.

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcay/groups.hpp"

namespace gcay::scheme {

using groups::DeltaElement;
using groups::GammaElement;
using groups::GroupContext;

// m * alpha^e, normalized with alpha^5 = -1: e in [0, 5), zero is (0, 0)
struct Monomial {
  int m = 0;
  int e = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline Monomial mono(int m, int e) {
  if (m == 0) return {0, 0};
  e %= 10;
  if (e < 0) e += 10;
  if (e >= 5) { e -= 5; m = -m; }
  return {m, e};
}

inline Monomial mono_neg(Monomial a) { return mono(-a.m, a.e); }
inline Monomial mono_shift(Monomial a, int k) { return a.m == 0 ? a : mono(a.m, a.e + k); }
inline Monomial mono_mul(Monomial a, Monomial b) { return mono(a.m * b.m, a.e + b.e); }

inline u64 mono_eval(Monomial a, const GroupContext& ctx) {
  if (ctx.n == 1) return 0;
  u64 base = ctx.alpha_pow[u32(a.e)];
  u64 mag = modmath::mulmod(u64(a.m < 0 ? -a.m : a.m) % ctx.n, base, ctx.n);
  return a.m < 0 ? (ctx.n - mag) % ctx.n : mag;
}

// a sum of at most two monomials in canonical order (used for determinants)
struct SymbolicSum {
  std::array<Monomial, 2> terms{};
  int size = 0;
  friend auto operator<=>(const SymbolicSum&, const SymbolicSum&) = default;

  static SymbolicSum of(Monomial a, Monomial b) {
    SymbolicSum s;
    if (a.m != 0 && b.m != 0 && a.e == b.e) {
      a = mono(a.m + b.m, a.e);
      b = {0, 0};
    }
    if (a.m != 0) s.terms[s.size++] = a;
    if (b.m != 0) s.terms[s.size++] = b;
    if (s.size == 2 && s.terms[1] < s.terms[0]) std::swap(s.terms[0], s.terms[1]);
    return s;
  }

  u64 eval(const GroupContext& ctx) const {
    u64 v = 0;
    for (int t = 0; t < size; ++t) v = (v + mono_eval(terms[t], ctx)) % ctx.n;
    return v;
  }
};

// Lambda membership is decidable from the symbolic shape alone:
//   L1: m alpha^e with |m| in {1, 2};  L2: ±alpha^e ± alpha^f with e != f.
enum class LambdaClass { none, L1, L2 };

inline LambdaClass lambda_class(const SymbolicSum& s) {
  if (s.size == 1) {
    int am = s.terms[0].m < 0 ? -s.terms[0].m : s.terms[0].m;
    return (am == 1 || am == 2) ? LambdaClass::L1 : LambdaClass::none;
  }
  if (s.size == 2) {
    for (int t = 0; t < 2; ++t)
      if (s.terms[t].m != 1 && s.terms[t].m != -1) return LambdaClass::none;
    return LambdaClass::L2;
  }
  return LambdaClass::none;
}

inline const char* lambda_class_name(LambdaClass c) {
  switch (c) {
    case LambdaClass::L1: return "L1";
    case LambdaClass::L2: return "L2";
    default: return "none";
  }
}

struct GeneratorFamily {
  Monomial c0, c1;
  DeltaElement s;
  friend auto operator<=>(const GeneratorFamily&, const GeneratorFamily&) = default;
};

// (c0 x, c1 x; s)^{-1} = (c0' x, c1' x; s^{-1}) pointwise in x
inline GeneratorFamily family_inverse(const GeneratorFamily& f) {
  GeneratorFamily g;
  g.s = groups::delta_inv(f.s);
  int s0 = int(f.s.x0), s1 = int(f.s.x1);
  if (f.s.i == 0) {
    g.c0 = mono_neg(mono_shift(f.c0, -s0));
    g.c1 = mono_neg(mono_shift(f.c1, -s1));
  } else {
    g.c0 = mono_neg(mono_shift(f.c1, -s1));
    g.c1 = mono_neg(mono_shift(f.c0, -s0));
  }
  return g;
}

inline bool family_self_inverse(const GeneratorFamily& f) { return family_inverse(f) == f; }

inline GammaElement family_eval(const GeneratorFamily& f, u64 x, const GroupContext& ctx) {
  GammaElement g;
  g.x0 = modmath::mulmod(mono_eval(f.c0, ctx), x % ctx.n, ctx.n);
  g.x1 = modmath::mulmod(mono_eval(f.c1, ctx), x % ctx.n, ctx.n);
  g.y0 = f.s.x0;
  g.y1 = f.s.x1;
  g.i = f.s.i;
  return g;
}

enum class Alphabet { basic, extended };

inline const char* alphabet_name(Alphabet a) { return a == Alphabet::basic ? "basic" : "extended"; }

struct GeneratorScheme {
  std::array<GeneratorFamily, 9> families{};
  Alphabet alphabet = Alphabet::basic;
  friend auto operator<=>(const GeneratorScheme&, const GeneratorScheme&) = default;
};

struct FormRef {
  int family = 0;  // 0..8
  bool inv = false;
  friend auto operator<=>(const FormRef&, const FormRef&) = default;
};

inline GeneratorFamily form(const GeneratorScheme& sch, FormRef r) {
  if (r.family < 0 || r.family > 8) throw std::out_of_range("family index out of range");
  const GeneratorFamily& f = sch.families[size_t(r.family)];
  return r.inv ? family_inverse(f) : f;
}

// forms in canonical order: family 0, its inverse, family 1, its inverse, ...
inline std::array<GeneratorFamily, 18> all_forms(const GeneratorScheme& sch) {
  std::array<GeneratorFamily, 18> out;
  for (int j = 0; j < 9; ++j) {
    out[size_t(2 * j)] = sch.families[size_t(j)];
    out[size_t(2 * j + 1)] = family_inverse(sch.families[size_t(j)]);
  }
  return out;
}

inline FormRef form_ref_at(int idx) { return {idx / 2, (idx & 1) != 0}; }

// The x-part of F(x) G(y) is linear in (x, y) with matrix ((a, b), (c, d));
// its Delta part is F.s G.s and its determinant decides Cramer solvability.
struct PairProduct {
  Monomial a, b, c, d;
  DeltaElement s;
  SymbolicSum det;
};

inline PairProduct pair_product_matrix(const GeneratorFamily& f, const GeneratorFamily& g) {
  PairProduct pp;
  pp.a = f.c0;
  pp.c = f.c1;
  Monomial g0 = f.s.i == 0 ? g.c0 : g.c1;
  Monomial g1 = f.s.i == 0 ? g.c1 : g.c0;
  pp.b = mono_shift(g0, int(f.s.x0));
  pp.d = mono_shift(g1, int(f.s.x1));
  pp.s = groups::delta_mul(f.s, g.s);
  pp.det = SymbolicSum::of(mono_mul(pp.a, pp.d), mono_neg(mono_mul(pp.b, pp.c)));
  return pp;
}

struct CertificateEntry {
  DeltaElement s;
  FormRef left, right;
  SymbolicSum det;
  LambdaClass cls = LambdaClass::none;
};

struct DiameterCertificate {
  std::vector<CertificateEntry> entries;
};

struct CoverageGap : std::runtime_error {
  std::vector<DeltaElement> missing;
  explicit CoverageGap(std::vector<DeltaElement> m)
      : std::runtime_error("no unit-determinant pair for " + std::to_string(m.size()) +
                           " transversal element(s)"),
        missing(std::move(m)) {}
};

struct ContainsIdentity : std::runtime_error {
  ContainsIdentity() : std::runtime_error("a family evaluates to the identity") {}
};

// One entry per transversal element: the first form pair (left-major order)
// whose Delta product hits it with a Lambda-class determinant.
inline DiameterCertificate certificate_build(const GeneratorScheme& sch) {
  auto forms = all_forms(sch);
  auto S = groups::transversal_S();
  DiameterCertificate cert;
  std::vector<DeltaElement> missing;
  for (const DeltaElement& s : S) {
    bool found = false;
    for (int u = 0; u < 18 && !found; ++u)
      for (int v = 0; v < 18 && !found; ++v) {
        if (groups::delta_mul(forms[size_t(u)].s, forms[size_t(v)].s) != s) continue;
        PairProduct pp = pair_product_matrix(forms[size_t(u)], forms[size_t(v)]);
        LambdaClass cls = lambda_class(pp.det);
        if (cls == LambdaClass::none) continue;
        cert.entries.push_back({s, form_ref_at(u), form_ref_at(v), pp.det, cls});
        found = true;
      }
    if (!found) missing.push_back(s);
  }
  if (!missing.empty()) throw CoverageGap(std::move(missing));
  return cert;
}

inline bool certificate_verify(const DiameterCertificate& cert, const GeneratorScheme& sch,
                               std::vector<std::string>* diagnostics = nullptr) {
  auto complain = [&](const std::string& msg) {
    if (diagnostics) diagnostics->push_back(msg);
  };
  auto delta_str = [](DeltaElement d) {
    return "(" + std::to_string(d.x0) + "," + std::to_string(d.x1) + "," + std::to_string(d.i) + ")";
  };
  bool ok = true;
  auto S = groups::transversal_S();
  std::set<u32> want;
  for (const DeltaElement& s : S) want.insert(groups::delta_index(s));
  std::set<u32> seen;
  for (const CertificateEntry& e : cert.entries) {
    u32 ix = groups::delta_index(e.s);
    if (!want.count(ix)) {
      ok = false;
      complain("entry target " + delta_str(e.s) + " is not in the transversal");
      continue;
    }
    if (!seen.insert(ix).second) {
      ok = false;
      complain("duplicate entry for " + delta_str(e.s));
      continue;
    }
    if (e.left.family < 0 || e.left.family > 8 || e.right.family < 0 || e.right.family > 8) {
      ok = false;
      complain("form reference out of range for " + delta_str(e.s));
      continue;
    }
    PairProduct pp = pair_product_matrix(form(sch, e.left), form(sch, e.right));
    if (pp.s != e.s) {
      ok = false;
      complain("pair product lands on " + delta_str(pp.s) + ", entry claims " + delta_str(e.s));
      continue;
    }
    if (pp.det != e.det) {
      ok = false;
      complain("determinant mismatch for " + delta_str(e.s));
      continue;
    }
    LambdaClass cls = lambda_class(pp.det);
    if (cls == LambdaClass::none || cls != e.cls) {
      ok = false;
      complain("determinant for " + delta_str(e.s) + " is not in Lambda");
      continue;
    }
  }
  for (u32 ix : want)
    if (!seen.count(ix)) {
      ok = false;
      complain("coverage gap: no entry for " + delta_str(groups::delta_unindex(ix)));
    }
  return ok;
}

// instantiation check: every certificate determinant is a unit mod n
inline bool certificate_units_ok(const DiameterCertificate& cert, const GroupContext& ctx) {
  if (ctx.n == 1) return true;
  for (const CertificateEntry& e : cert.entries) {
    u64 v = e.det.eval(ctx);
    if (v == 0 || std::gcd(v, ctx.n) != 1) return false;
  }
  return true;
}

// X = union of the 18 forms over all x in Z_n, sorted by vertex index
inline std::vector<GammaElement> expand_x(const GeneratorScheme& sch, const GroupContext& ctx) {
  auto forms = all_forms(sch);
  std::vector<u64> idx;
  idx.reserve(18 * size_t(ctx.n));
  for (const GeneratorFamily& f : forms)
    for (u64 x = 0; x < ctx.n; ++x) {
      GammaElement g = family_eval(f, x, ctx);
      if (groups::gamma_is_identity(g)) throw ContainsIdentity();
      idx.push_back(groups::vertex_index(g, ctx));
    }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<GammaElement> out;
  out.reserve(idx.size());
  for (u64 t : idx) out.push_back(groups::vertex_unindex(t, ctx));
  return out;
}

// the target degree budget: |X| <= 17 n - 1
inline bool degree_conforming(const GeneratorScheme& sch, const GroupContext& ctx) {
  return expand_x(sch, ctx).size() <= 17 * ctx.n - 1;
}

struct DegreeInfeasible : std::runtime_error {
  explicit DegreeInfeasible(const std::string& what) : std::runtime_error(what) {}
};

// Grow X to exactly d elements, keeping it inverse-closed and identity-free:
// scan vertices in index order, adding involutions singly and other elements
// together with their inverses.
inline std::vector<GammaElement> pad_to_degree(std::vector<GammaElement> X, u64 d,
                                               const GroupContext& ctx) {
  if (d < X.size()) throw DegreeInfeasible("target degree below current size");
  if (d > ctx.order() - 1) throw DegreeInfeasible("target degree exceeds group size");
  std::set<u64> members;
  for (const GammaElement& g : X) members.insert(groups::vertex_index(g, ctx));
  u64 remaining = d - X.size();
  for (u64 t = 1; t < ctx.order() && remaining > 0; ++t) {
    if (members.count(t)) continue;
    GammaElement g = groups::vertex_unindex(t, ctx);
    GammaElement gi = groups::gamma_inv(g, ctx);
    u64 ti = groups::vertex_index(gi, ctx);
    if (ti == t) {
      members.insert(t);
      --remaining;
    } else if (ti > t && !members.count(ti) && remaining >= 2) {
      members.insert(t);
      members.insert(ti);
      remaining -= 2;
    }
  }
  if (remaining > 0) throw DegreeInfeasible("cannot reach target degree");
  std::vector<GammaElement> out;
  out.reserve(members.size());
  for (u64 t : members) out.push_back(groups::vertex_unindex(t, ctx));
  return out;
}

}  // namespace gcay::scheme
