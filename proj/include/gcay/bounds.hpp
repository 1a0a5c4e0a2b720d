#pragma once

// Order bounds for degree-d diameter-k graphs and the record table for the
// semidirect-product construction: given degree d, pick n = floor((d+1)/17),
// take the largest prime p ≡ 1 (mod 10) with p <= n (p = 1 if none), and
// build a diameter-2 graph of order 200 p^2 whose degree pads up to d.

#include <cmath>
#include <stdexcept>
#include <string>

#include "gcay/primes.hpp"

namespace gcay::bounds {

struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct DegreeTooSmall : std::domain_error {
  explicit DegreeTooSmall(u64 d)
      : std::domain_error("construction needs degree >= 16, got " + std::to_string(d)) {}
};

// 1 + d + d(d-1) + ... + d(d-1)^{k-1}
inline u128 moore_bound(u64 d, u32 k) {
  if (d < 1 || k < 1) throw DomainError("moore bound needs d >= 1, k >= 1");
  u128 sum = 1, branch = d;
  for (u32 i = 0; i < k; ++i) {
    sum += branch;
    branch *= d - 1;
  }
  return sum;
}

// largest order of a known degree-d diameter-2 vertex-transitive family,
// floor(d^2/4) + d + 1 (McKay-Miller-Siran style at d = (3q-1)/2 does better
// for sporadic degrees; this is the folklore general-d benchmark)
inline u128 folklore_bound(u64 d) {
  if (d < 1) throw DomainError("degree must be positive");
  return u128(d) * d / 4 + d + 1;
}

// the easy general lower record d^2/2 available for d >= 4
inline u128 half_bound(u64 d) {
  if (d < 4) throw DomainError("half bound needs degree >= 4");
  return u128(d) * d / 2;
}

namespace detail {

inline u128 gcd128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// decimal expansion of num/den to `digits` places, round half up
inline std::string ratio_decimal(u128 num, u128 den, int digits) {
  u128 whole = num / den;
  u128 rem = num % den;
  std::string s = to_string_u128(whole);
  if (digits <= 0) return s;
  s.push_back('.');
  for (int i = 0; i < digits - 1; ++i) {
    rem *= 10;
    s.push_back(char('0' + int(rem / den)));
    rem %= den;
  }
  rem *= 10;
  u128 last = rem / den;
  rem %= den;
  if (2 * rem >= den) ++last;  // may carry
  if (last < 10) {
    s.push_back(char('0' + int(last)));
    return s;
  }
  // propagate the carry through the digit string
  s.push_back('0');
  int i = int(s.size()) - 2;
  while (i >= 0) {
    if (s[size_t(i)] == '.') { --i; continue; }
    if (s[size_t(i)] != '9') { ++s[size_t(i)]; break; }
    s[size_t(i)] = '0';
    --i;
  }
  if (i < 0) s.insert(s.begin(), '1');
  return s;
}

}  // namespace detail

struct BoundReport {
  u64 d = 0;        // requested degree
  u64 n = 0;        // floor((d+1)/17)
  u64 r = 0;        // (d+1) mod 17
  u64 p = 0;        // largest class prime <= n, or 1
  u64 d_prime = 0;  // 17 p - 1, the degree the unpadded graph realizes
  u128 order = 0;   // 200 p^2
  u128 ratio_num = 0, ratio_den = 0;  // order / d^2, reduced
  bool guaranteed = false;            // d >= 360756: ratio provably > 0.684
  std::string ratio_decimal(int digits = 6) const {
    return detail::ratio_decimal(ratio_num, ratio_den, digits);
  }
};

inline constexpr u64 guarantee_threshold = 360756;

inline u64 largest_class_prime_upto(u64 n) {
  if (n < 11) return 1;
  u64 c = n - (n - 1) % 10;  // largest c ≡ 1 (mod 10) with c <= n
  while (c >= 11) {
    if (primes::is_prime(c)) return c;
    c -= 10;
  }
  return 1;
}

inline BoundReport construction_bound(u64 d) {
  if (d < 16) throw DegreeTooSmall(d);
  if (d > 1'000'000'000'000'000ull) throw DomainError("degree exceeds the 1e15 cap");
  BoundReport rep;
  rep.d = d;
  rep.n = (d + 1) / 17;
  rep.r = (d + 1) % 17;
  rep.p = largest_class_prime_upto(rep.n);
  rep.d_prime = 17 * rep.p - 1;
  rep.order = u128(200) * rep.p * rep.p;
  u128 num = rep.order;
  u128 den = u128(d) * d;
  u128 g = detail::gcd128(num, den);
  rep.ratio_num = num / g;
  rep.ratio_den = den / g;
  rep.guaranteed = d >= guarantee_threshold;
  return rep;
}

// The uniform constant behind the guarantee: for every d >= 360756 the
// construction reaches at least c d^2 vertices with
// c = 200 / (289 (1+delta)^2) * (1 - 15/360756)^2 > 0.684.
inline double asymptotic_constant(double delta = primes::EstimateConstants{}.delta) {
  double step = 1.0 / ((1 + delta) * (1 + delta));
  double slack = 1.0 - 15.0 / double(guarantee_threshold);
  return 200.0 / 289.0 * step * slack * slack;
}

// if a family achieves c d^2 vertices in the limit, its members beat
// 2 sqrt(c) - 1 of the Moore bound at the matched degree and 2 - 1/sqrt(c)
// at the padded degree; both limits for c = 200/289 bracket the family
struct RatioLimits {
  double lower = 0.0;  // 2 sqrt(c) - 1
  double upper = 0.0;  // 2 - 1/sqrt(c)
};

inline RatioLimits ratio_limits(double c) {
  if (!(c > 0.0) || c > 1.0) throw DomainError("c must lie in (0, 1]");
  double s = std::sqrt(c);
  return {2 * s - 1, 2 - 1 / s};
}

}  // namespace gcay::bounds
