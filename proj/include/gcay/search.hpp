#pragma once

// Randomized search for generator schemes.  Phase 1 anneals the nine Delta
// parts until products of the 18 form parts cover all of Delta_10 (so every
// transversal element has at least one candidate pair), with family 0 pinned
// to a non-identity involution and family 1 to a part that supports a
// pointwise self-inverse family.  Phase 2 hill-climbs coefficient monomials
// until every transversal element gets a pair with determinant in Lambda.
// Accepted schemes always expand to exactly 17n - 1 generators.

#include <cmath>
#include <random>

#include "gcay/cayley.hpp"
#include "gcay/scheme.hpp"

namespace gcay::scheme {

struct SearchExhausted : std::runtime_error {
  explicit SearchExhausted(const std::string& what) : std::runtime_error(what) {}
};

enum class SearchAlphabet { basic, extended, zero_only };

struct SearchResult {
  GeneratorScheme scheme;
  DiameterCertificate certificate;
  u64 attempts = 0;
};

namespace detail {

using groups::DeltaElement;

inline bool delta_is_involution(DeltaElement g) {
  return !groups::delta_is_identity(g) && groups::delta_mul(g, g) == groups::delta_identity();
}

// incremental cover bookkeeping: counts, for every Delta element, how many
// ordered pairs of distinct current parts multiply onto it
struct PartCover {
  std::array<int, 200> mult{};        // multiplicity of each part in the 18 forms
  std::array<int, 200> pairs{};       // ordered-pair counts over distinct parts
  std::vector<u32> distinct;          // current distinct parts
  int covered = 0;

  void add(u32 p) {
    if (mult[p]++ > 0) return;
    distinct.push_back(p);
    DeltaElement dp = groups::delta_unindex(p);
    for (u32 q : distinct) {
      DeltaElement dq = groups::delta_unindex(q);
      bump(groups::delta_index(groups::delta_mul(dp, dq)), +1);
      if (q != p) bump(groups::delta_index(groups::delta_mul(dq, dp)), +1);
    }
  }

  void remove(u32 p) {
    if (--mult[p] > 0) return;
    distinct.erase(std::find(distinct.begin(), distinct.end(), p));
    DeltaElement dp = groups::delta_unindex(p);
    bump(groups::delta_index(groups::delta_mul(dp, dp)), -1);
    for (u32 q : distinct) {
      DeltaElement dq = groups::delta_unindex(q);
      bump(groups::delta_index(groups::delta_mul(dp, dq)), -1);
      bump(groups::delta_index(groups::delta_mul(dq, dp)), -1);
    }
  }

  void bump(u32 e, int d) {
    int before = pairs[e];
    pairs[e] += d;
    if (before == 0 && pairs[e] > 0) ++covered;
    if (before > 0 && pairs[e] == 0) --covered;
  }
};

struct Phase1 {
  std::array<DeltaElement, 9> parts;
  PartCover cover;
  std::vector<DeltaElement> pool0;  // involutions usable by family 0
  std::vector<DeltaElement> pool1;  // parts supporting a self-inverse family
  std::vector<DeltaElement> pool_free;

  Phase1() {
    for (u32 t = 1; t < 200; ++t) {
      DeltaElement g = groups::delta_unindex(t);
      if (delta_is_involution(g)) {
        if (g != DeltaElement{5, 5, 0}) pool0.push_back(g);
        if (g.i == 1 || g == DeltaElement{5, 5, 0}) pool1.push_back(g);
      } else {
        pool_free.push_back(g);
      }
    }
  }

  void set_family(int j, DeltaElement p) {
    parts[size_t(j)] = p;
    cover.add(groups::delta_index(p));
    cover.add(groups::delta_index(groups::delta_inv(p)));
  }

  void unset_family(int j) {
    DeltaElement p = parts[size_t(j)];
    cover.remove(groups::delta_index(p));
    cover.remove(groups::delta_index(groups::delta_inv(p)));
  }

  // a candidate for family j must not collide with (or invert onto) any
  // other family's part, so that the 18 forms carry exactly 16 distinct
  // parts and X expands to exactly 17n - 1 elements
  bool admissible(int j, DeltaElement p) const {
    for (int o = 0; o < 9; ++o) {
      if (o == j) continue;
      if (parts[size_t(o)] == p) return false;
      if (o >= 2 && groups::delta_inv(parts[size_t(o)]) == p) return false;
      if (j >= 2 && groups::delta_inv(p) == parts[size_t(o)]) return false;
    }
    return true;
  }

  bool solved() const { return cover.covered == 200; }
};

inline bool phase1_run(Phase1& st, std::mt19937_64& rng, u64 max_moves) {
  auto pick = [&](const std::vector<DeltaElement>& pool) {
    return pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
  };
  for (int j = 0; j < 9; ++j) {
    const auto& pool = j == 0 ? st.pool0 : j == 1 ? st.pool1 : st.pool_free;
    DeltaElement p;
    do p = pick(pool);
    while (!st.admissible(j, p));
    st.set_family(j, p);
  }
  double temp = 2.5;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (u64 move = 0; move < max_moves; ++move) {
    if (st.solved()) return true;
    int j = int(std::uniform_int_distribution<int>(0, 8)(rng));
    DeltaElement cand;
    if (j <= 1) {
      cand = pick(j == 0 ? st.pool0 : st.pool1);
    } else if (unit(rng) < 0.5) {
      cand = pick(st.pool_free);
    } else {
      // directed: aim a product at an uncovered element
      u32 miss = 0;
      int seen = 0;
      for (u32 e = 0; e < 200; ++e)
        if (st.cover.pairs[e] == 0 && ++seen &&
            std::uniform_int_distribution<int>(1, seen)(rng) == 1)
          miss = e;
      DeltaElement target = groups::delta_unindex(miss);
      u32 v = st.cover.distinct[std::uniform_int_distribution<size_t>(0, st.cover.distinct.size() - 1)(rng)];
      DeltaElement dv = groups::delta_unindex(v);
      cand = unit(rng) < 0.5 ? groups::delta_mul(target, groups::delta_inv(dv))
                             : groups::delta_mul(groups::delta_inv(dv), target);
      if (unit(rng) < 0.5) cand = groups::delta_inv(cand);
      if (groups::delta_is_identity(cand) || delta_is_involution(cand)) cand = pick(st.pool_free);
    }
    if (!st.admissible(j, cand) || cand == st.parts[size_t(j)]) continue;
    int before = st.cover.covered;
    DeltaElement old = st.parts[size_t(j)];
    st.unset_family(j);
    st.set_family(j, cand);
    int gain = st.cover.covered - before;
    if (gain < 0 && unit(rng) >= std::exp(double(gain) / temp)) {
      st.unset_family(j);
      st.set_family(j, old);
    }
    temp *= 0.99995;
    if (temp < 0.05) temp = 2.5;
  }
  return st.solved();
}

struct Phase2 {
  const GeneratorScheme* sch = nullptr;
  std::vector<Monomial> pool;
  std::vector<DeltaElement> targets;  // transversal
  int score = 0;

  int rescore(const GeneratorScheme& s) const {
    auto forms = all_forms(s);
    int good = 0;
    for (const DeltaElement& t : targets) {
      bool hit = false;
      for (int u = 0; u < 18 && !hit; ++u)
        for (int v = 0; v < 18 && !hit; ++v) {
          if (groups::delta_mul(forms[size_t(u)].s, forms[size_t(v)].s) != t) continue;
          if (lambda_class(pair_product_matrix(forms[size_t(u)], forms[size_t(v)]).det) !=
              LambdaClass::none)
            hit = true;
        }
      if (hit) ++good;
    }
    return good;
  }
};

// family 1 must stay pointwise self-inverse: on a swap part (t, -t, 1) that
// ties c0 = -alpha^t c1; on (5, 5, 0) any coefficients work
inline void apply_self_inverse_tie(GeneratorFamily& f) {
  if (f.s.i == 1) f.c0 = mono_neg(mono_shift(f.c1, int(f.s.x0)));
}

inline bool phase2_run(GeneratorScheme& sch, std::mt19937_64& rng,
                       const std::vector<Monomial>& pool, u64 max_proposals) {
  Phase2 ph;
  ph.pool = pool;
  ph.targets = groups::transversal_S();
  auto pick = [&] { return ph.pool[std::uniform_int_distribution<size_t>(0, ph.pool.size() - 1)(rng)]; };
  auto randomize = [&](int j) {
    GeneratorFamily& f = sch.families[size_t(j)];
    f.c0 = pick();
    f.c1 = pick();
    if (j == 1) apply_self_inverse_tie(f);
  };
  for (int j = 0; j < 9; ++j) randomize(j);
  int score = ph.rescore(sch);
  int stall = 0;
  for (u64 it = 0; it < max_proposals; ++it) {
    if (score == int(ph.targets.size())) return true;
    if (stall > 400) {
      for (int j = 0; j < 9; ++j) randomize(j);
      score = ph.rescore(sch);
      stall = 0;
      continue;
    }
    int j = int(std::uniform_int_distribution<int>(0, 8)(rng));
    GeneratorFamily old = sch.families[size_t(j)];
    randomize(j);
    int after = ph.rescore(sch);
    if (after >= score) {
      if (after > score) stall = 0;
      score = after;
    } else {
      sch.families[size_t(j)] = old;
      ++stall;
    }
  }
  return false;
}

}  // namespace detail

// Search for a scheme whose certificate covers the whole transversal.  The
// budget counts full attempts (one part-annealing run plus one coefficient
// climb plus validation).  Equal (budget, seed, alphabet) always reproduce
// the same scheme.
inline SearchResult search(u64 budget = 64, u64 seed = 0,
                           SearchAlphabet alphabet = SearchAlphabet::basic) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<Monomial> pool;
  if (alphabet == SearchAlphabet::zero_only) {
    pool.push_back(mono(0, 0));
  } else {
    for (int e = 0; e < 5; ++e) {
      pool.push_back(mono(1, e));
      pool.push_back(mono(-1, e));
    }
  }
  GroupContext small = GroupContext::make(1);
  GroupContext check = GroupContext::with_alpha(11, 2);
  for (u64 attempt = 1; attempt <= budget; ++attempt) {
    detail::Phase1 st;
    if (!detail::phase1_run(st, rng, 400'000)) continue;
    GeneratorScheme sch;
    sch.alphabet = alphabet == SearchAlphabet::extended ? Alphabet::extended : Alphabet::basic;
    for (int j = 0; j < 9; ++j) sch.families[size_t(j)].s = st.parts[size_t(j)];
    if (!detail::phase2_run(sch, rng, pool, 30'000)) continue;
    try {
      SearchResult res;
      res.scheme = sch;
      res.certificate = certificate_build(sch);
      res.attempts = attempt;
      auto x1 = expand_x(sch, small);
      auto x11 = expand_x(sch, check);
      if (x1.size() != 16 || x11.size() != 186) continue;
      auto graph = cayley::build_graph(x11, check);
      if (!cayley::diameter2_verify(graph, cayley::VerifyMethod::bfs).diameter2) continue;
      return res;
    } catch (const CoverageGap&) {
      continue;
    }
  }
  throw SearchExhausted("no scheme found within budget");
}

}  // namespace gcay::scheme
