#pragma once

// Prime machinery for the density estimates: primality, successors in the
// residue class 1 mod 10, the Chebyshev function theta(x; k, l), the audit of
// consecutive-prime ratios in the class, and the derived stepping constants.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gcay/modmath.hpp"

namespace gcay::primes {

struct RangeTooLarge : std::length_error {
  explicit RangeTooLarge(const std::string& what) : std::length_error(what) {}
};

struct Overflow : std::overflow_error {
  explicit Overflow(const std::string& what) : std::overflow_error(what) {}
};

inline bool is_prime(u64 m) { return modmath::detail::miller_rabin(m); }

// smallest prime p > x with p ≡ 1 (mod 10)
inline u64 next_prime_in_class(double x) {
  if (!(x >= 0)) throw std::invalid_argument("x must be non-negative");
  if (x >= 9.2e18) throw Overflow("search start exceeds 64-bit range");
  u64 fl = x < 1 ? 0 : u64(std::floor(x));
  u64 p = fl - fl % 10 + 1;
  while (double(p) <= x || !is_prime(p)) {
    if (p > u64(-1) - 10) throw Overflow("prime search exceeded 64-bit range");
    p += 10;
  }
  return p;
}

namespace detail {

inline constexpr u64 segment_width = 10'000'000;

inline std::vector<u64> base_primes(u64 limit) {
  std::vector<bool> comp(limit + 1, false);
  std::vector<u64> out;
  for (u64 i = 2; i <= limit; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) comp[j] = true;
  }
  return out;
}

// calls f(p) for every prime p in [lo, hi], ascending, via a segmented sieve
template <class F>
inline void for_each_prime(u64 lo, u64 hi, F&& f) {
  if (hi < 2 || hi < lo) return;
  if (lo < 2) lo = 2;
  u64 root = u64(std::sqrt(double(hi))) + 2;
  auto base = base_primes(root);
  std::vector<std::uint8_t> seg;
  for (u64 start = lo; start <= hi; start += segment_width) {
    u64 end = std::min(hi, start + segment_width - 1);
    seg.assign(end - start + 1, 1);
    for (u64 p : base) {
      if (p * p > end) break;
      u64 first = std::max(p * p, (start + p - 1) / p * p);
      for (u64 j = first; j <= end; j += p) seg[j - start] = 0;
    }
    if (start <= 1) seg[1 - start] = 0;
    for (u64 v = start; v <= end; ++v)
      if (seg[v - start]) f(v);
    if (end == hi) break;
  }
}

}  // namespace detail

// primes p ≡ 1 (mod 10) in [lo, hi]
inline std::vector<u64> class_primes(u64 lo, u64 hi) {
  std::vector<u64> out;
  detail::for_each_prime(lo, hi, [&](u64 p) {
    if (p % 10 == 1) out.push_back(p);
  });
  return out;
}

inline constexpr double theta_cap = 1e8;

// theta(x; k, l) = sum of log p over primes p <= x with p ≡ l (mod k).
// Kahan-compensated summation keeps the error well below the tolerances the
// density checks use.
inline double theta(double x, u64 k, u64 l) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (std::gcd(k, l) != 1) throw std::invalid_argument("k and l must be coprime");
  if (!(x >= 0)) throw std::invalid_argument("x must be non-negative");
  if (x > theta_cap) throw RangeTooLarge("theta argument exceeds the 1e8 cap");
  if (x < 2) return 0.0;
  u64 hi = u64(std::floor(x));
  double sum = 0.0, comp = 0.0;
  detail::for_each_prime(2, hi, [&](u64 p) {
    if (p % k != l % k) return;
    double y = std::log(double(p)) - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  });
  return sum;
}

inline double theta(double x) { return theta(x, 1, 0); }

// Audit of consecutive class primes p1 < p2 in [lo, hi]: a violation is a
// pair with p2 > (1 + delta) p1.  The comparison runs in exact integer
// arithmetic with delta read at 1e-7 resolution, so no float rounding can
// flip a verdict.
struct AuditReport {
  u64 lo = 0, hi = 0;
  double delta = 0.0;
  u64 checked_pairs = 0;
  std::optional<std::pair<u64, u64>> worst_pair;  // maximises p2 / p1
  std::vector<std::pair<u64, u64>> violations;
  bool max_ratio_exceeds(double bound) const {
    if (!worst_pair) return false;
    u64 num = u64(std::llround(bound * 1e7));
    return u128(worst_pair->second) * 10'000'000 > u128(worst_pair->first) * num;
  }
};

inline AuditReport gap_audit(u64 lo, u64 hi, double delta) {
  if (lo < 11) throw std::invalid_argument("audit must start at 11 or later");
  if (lo >= hi) throw std::invalid_argument("empty audit range");
  if (hi > 1'000'000'000) throw RangeTooLarge("audit range exceeds the 1e9 cap");
  if (!(delta >= 0)) throw std::invalid_argument("delta must be non-negative");
  AuditReport rep;
  rep.lo = lo;
  rep.hi = hi;
  rep.delta = delta;
  u64 scale = 10'000'000;
  u64 dnum = scale + u64(std::llround(delta * 1e7));
  u64 prev = 0;
  detail::for_each_prime(lo, hi, [&](u64 p) {
    if (p % 10 != 1) return;
    if (prev != 0) {
      ++rep.checked_pairs;
      if (u128(p) * scale > u128(prev) * dnum) rep.violations.emplace_back(prev, p);
      if (!rep.worst_pair ||
          u128(p) * rep.worst_pair->first > u128(rep.worst_pair->second) * prev)
        rep.worst_pair = std::make_pair(prev, p);
    }
    prev = p;
  });
  return rep;
}

// Stepping constants for the prime ladder: epsilon is the Chebyshev bias
// allowance, delta the relative step, gamma the explicit theta error bound.
struct EstimateConstants {
  u32 k = 10;
  u32 phi_k = 4;
  double epsilon = 0.002785;
  double delta = 0.0055856;
  double gamma = 1.412480;
  double x_verified = 1e10;     // below: verified computationally elsewhere
  double x_effective = 4.2e6;   // below: explicit theta bounds take over
  u64 x_audited = 21221;        // below: direct audit of class gaps
};

struct ConstantsReport {
  EstimateConstants input;
  double delta_min = 0.0;          // 2 eps / (1 - eps), the least usable delta
  double regime2_threshold = 0.0;  // explicit-bound regime needs x above this
  double margin_at_effective = 0.0;
  bool delta_ok = false;
  bool threshold_ok = false;
};

inline ConstantsReport derive_constants(EstimateConstants c = {}) {
  ConstantsReport r;
  r.input = c;
  r.delta_min = 2 * c.epsilon / (1 - c.epsilon);
  double root = 4 * c.gamma * (std::sqrt(1 + c.delta) + 1) / c.delta * c.phi_k / 4.0;
  r.regime2_threshold = root * root;
  r.margin_at_effective =
      c.delta / c.phi_k * std::sqrt(c.x_effective) - c.gamma * (1 + std::sqrt(1 + c.delta));
  r.delta_ok = c.delta > r.delta_min;
  r.threshold_ok = r.regime2_threshold < c.x_effective && r.margin_at_effective > 0;
  return r;
}

enum class Regime { audited, effective, verified, none };

inline const char* regime_name(Regime r) {
  switch (r) {
    case Regime::audited: return "audited";
    case Regime::effective: return "effective";
    case Regime::verified: return "verified";
    default: return "none";
  }
}

// For x >= 21221 some prime p ≡ 1 (mod 10) lies in (x, (1 + delta) x]:
// by direct audit up to 4.2e6, by explicit theta bounds up to 1e10, and by
// verified numerics beyond.  Below 21221 no guarantee is made.
struct IntervalGuarantee {
  double x = 0.0;
  Regime regime = Regime::none;
  double lo = 0.0, hi = 0.0;  // the guaranteed interval (lo, hi]
};

inline IntervalGuarantee interval_guarantee(double x, EstimateConstants c = {}) {
  IntervalGuarantee g;
  g.x = x;
  if (x < double(c.x_audited)) {
    g.regime = Regime::none;
    return g;
  }
  if (x < c.x_effective) g.regime = Regime::audited;
  else if (x < c.x_verified) g.regime = Regime::effective;
  else g.regime = Regime::verified;
  g.lo = x;
  g.hi = (1 + c.delta) * x;
  return g;
}

}  // namespace gcay::primes
