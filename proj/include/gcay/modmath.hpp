#pragma once

// Modular arithmetic over Z_n: element orders, primitive roots, the order-10
// residue alpha used by the semidirect-product construction, the unit set
// Lambda attached to alpha, and 2x2 linear solving mod n.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcay {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline std::string to_string_u128(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

namespace modmath {

struct NotAUnit : std::invalid_argument {
  u64 value, modulus;
  NotAUnit(u64 a, u64 n)
      : std::invalid_argument("not a unit mod " + std::to_string(n) + ": " + std::to_string(a)),
        value(a), modulus(n) {}
};

struct NotPrime : std::invalid_argument {
  u64 value;
  explicit NotPrime(u64 p)
      : std::invalid_argument("not prime: " + std::to_string(p)), value(p) {}
};

struct WrongResidueClass : std::invalid_argument {
  u64 value;
  explicit WrongResidueClass(u64 p)
      : std::invalid_argument("prime is not 1 mod 10: " + std::to_string(p)), value(p) {}
};

struct NotCoprime : std::runtime_error {
  u64 value, modulus;
  NotCoprime(u64 v, u64 p)
      : std::runtime_error("shares a factor with " + std::to_string(p) + ": " + std::to_string(v)),
        value(v), modulus(p) {}
};

struct SingularSystem : std::runtime_error {
  u64 det, modulus;
  SingularSystem(u64 d, u64 n)
      : std::runtime_error("determinant " + std::to_string(d) + " not invertible mod " + std::to_string(n)),
        det(d), modulus(n) {}
};

inline u64 mulmod(u64 a, u64 b, u64 n) { return u64(u128(a) * b % n); }

inline u64 powmod(u64 a, u64 e, u64 n) {
  if (n == 1) return 0;
  u64 r = 1;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

// value of m * alpha^e reduced into [0, n)
inline u64 signed_mod(i64 v, u64 n) {
  i64 m = i64(n);
  i64 r = v % m;
  if (r < 0) r += m;
  return u64(r);
}

inline u64 inverse_mod(u64 a, u64 n) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  if (n == 1) return 0;
  a %= n;
  i64 t = 0, newt = 1;
  i64 r = i64(n), newr = i64(a);
  while (newr != 0) {
    i64 q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  if (r != 1) throw NotAUnit(a, n);
  return signed_mod(t, n);
}

namespace detail {

inline bool miller_rabin(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // deterministic witness set for all 64-bit inputs
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

inline u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  u64 c = 1;
  while (true) {
    u64 x = 2, y = 2, d = 1;
    auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      u64 diff = x > y ? x - y : y - x;
      d = diff == 0 ? n : std::gcd(diff, n);
    }
    if (d != n) return d;
    ++c;
  }
}

inline void factor_into(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (miller_rabin(n)) { primes.push_back(n); return; }
  u64 d = pollard_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

// (prime, exponent) pairs, primes ascending
inline std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<u64> ps;
  factor_into(n, ps);
  std::sort(ps.begin(), ps.end());
  std::vector<std::pair<u64, int>> out;
  for (u64 p : ps) {
    if (!out.empty() && out.back().first == p) ++out.back().second;
    else out.emplace_back(p, 1);
  }
  return out;
}

inline u64 euler_phi(u64 n) {
  u64 phi = 1;
  for (auto [p, k] : factorize(n)) {
    phi *= p - 1;
    for (int i = 1; i < k; ++i) phi *= p;
  }
  return phi;
}

}  // namespace detail

inline u64 element_order(u64 a, u64 n) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
  a %= n;
  if (std::gcd(a, n) != 1) throw NotAUnit(a, n);
  u64 t = detail::euler_phi(n);
  for (auto [q, k] : detail::factorize(t)) {
    (void)k;
    while (t % q == 0 && powmod(a, t / q, n) == 1) t /= q;
  }
  return t;
}

inline u64 primitive_root(u64 p) {
  if (!detail::miller_rabin(p)) throw NotPrime(p);
  if (p == 2) return 1;
  auto fac = detail::factorize(p - 1);
  for (u64 a = 2; a < p; ++a) {
    bool ok = true;
    for (auto [q, k] : fac) {
      (void)k;
      if (powmod(a, (p - 1) / q, p) == 1) { ok = false; break; }
    }
    if (ok) return a;
  }
  throw std::logic_error("no primitive root found");
}

struct AlphaChecks {
  bool order10 = false;      // alpha^10 = 1 and no smaller power of the tested divisors
  bool units_minus = false;  // gcd(alpha^i - 1, p) = 1 for i = 2..5
  bool units_plus = false;   // gcd(alpha^i + 1, p) = 1 for i = 3, 4
  bool half_negates = false; // alpha^5 = -1
  bool all() const { return order10 && units_minus && units_plus && half_negates; }
};

struct AlphaCertificate {
  u64 p = 0;
  u64 a = 0;      // smallest primitive root
  u64 s = 0;      // (p - 1) / 10
  u64 alpha = 0;  // a^s mod p
  AlphaChecks checks;
};

inline AlphaCertificate find_alpha(u64 p) {
  if (!detail::miller_rabin(p)) throw NotPrime(p);
  if (p % 10 != 1) throw WrongResidueClass(p);
  AlphaCertificate cert;
  cert.p = p;
  cert.a = primitive_root(p);
  cert.s = (p - 1) / 10;
  cert.alpha = powmod(cert.a, cert.s, p);
  cert.checks.order10 = element_order(cert.alpha, p) == 10;
  cert.checks.units_minus = true;
  for (int i = 2; i <= 5; ++i) {
    u64 v = (powmod(cert.alpha, u64(i), p) + p - 1) % p;
    if (std::gcd(v, p) != 1) cert.checks.units_minus = false;
  }
  cert.checks.units_plus = true;
  for (int i = 3; i <= 4; ++i) {
    u64 v = (powmod(cert.alpha, u64(i), p) + 1) % p;
    if (std::gcd(v, p) != 1) cert.checks.units_plus = false;
  }
  cert.checks.half_negates = powmod(cert.alpha, 5, p) == p - 1;
  return cert;
}

// Lambda = {±alpha^i, ±2 alpha^i} ∪ {±alpha^i ± alpha^j : i != j}, residues mod p.
// Every member must be a unit; a violation identifies an alpha that does not
// satisfy the order-10 unit conditions.
struct LambdaSet {
  u64 p = 0;
  u64 alpha = 0;
  std::vector<u64> elements;  // sorted, deduplicated
  bool contains(u64 v) const {
    return std::binary_search(elements.begin(), elements.end(), v % p);
  }
};

inline LambdaSet lambda_set(u64 p, u64 alpha) {
  if (p < 2) throw std::invalid_argument("modulus must be at least 2");
  LambdaSet ls;
  ls.p = p;
  ls.alpha = alpha % p;
  std::vector<u64> pow(5);
  for (int i = 0; i < 5; ++i) pow[i] = powmod(alpha, u64(i), p);
  auto push = [&](u64 v) {
    v %= p;
    if (v == 0 || std::gcd(v, p) != 1) throw NotCoprime(v, p);
    ls.elements.push_back(v);
  };
  for (int i = 0; i < 5; ++i) {
    push(pow[i]);
    push(p - pow[i] % p);
    push(2 * pow[i]);
    push(2 * (p - pow[i] % p));
  }
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j) continue;
      push(pow[i] + pow[j]);
      push(pow[i] + p - pow[j]);
      push(p - pow[i] + p - pow[j]);
    }
  std::sort(ls.elements.begin(), ls.elements.end());
  ls.elements.erase(std::unique(ls.elements.begin(), ls.elements.end()), ls.elements.end());
  return ls;
}

struct Solution2x2 {
  u64 x = 0, y = 0;
};

// Solve a*x + b*y = u, c*x + d*y = v over Z_n by Cramer's rule.
// Requires the determinant to be a unit mod n; n = 1 is the degenerate
// one-point case and always yields (0, 0).
inline Solution2x2 solve2x2(u64 a, u64 b, u64 c, u64 d, u64 u, u64 v, u64 n) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  a %= n; b %= n; c %= n; d %= n; u %= n; v %= n;
  u64 det = (mulmod(a, d, n) + n - mulmod(b, c, n)) % n;
  if (std::gcd(det, n) != 1) throw SingularSystem(det, n);
  u64 inv = inverse_mod(det, n);
  u64 rx = (mulmod(d, u, n) + n - mulmod(b, v, n)) % n;
  u64 ry = (mulmod(a, v, n) + n - mulmod(c, u, n)) % n;
  return {mulmod(inv, rx, n), mulmod(inv, ry, n)};
}

}  // namespace modmath
}  // namespace gcay
