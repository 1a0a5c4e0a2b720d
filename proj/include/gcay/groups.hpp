#pragma once

// The two groups of the construction: Delta = Z_k^2 ⋊ Z_2 with coordinate
// swap (k = 10 throughout), and Gamma(n, alpha) = Z_n^2 ⋊ Delta where the
// Delta part acts by swapping the Z_n coordinates and scaling by powers of
// alpha.  Gamma has order 200 n^2.

#include <array>
#include <compare>
#include <stdexcept>
#include <vector>

#include "gcay/modmath.hpp"

namespace gcay::groups {

inline constexpr u32 delta_k = 10;

struct DeltaElement {
  u32 x0 = 0, x1 = 0;  // residues mod k
  u32 i = 0;           // swap bit
  friend auto operator<=>(const DeltaElement&, const DeltaElement&) = default;
};

inline DeltaElement delta_identity() { return {}; }

inline DeltaElement delta_mul(DeltaElement g, DeltaElement h, u32 k = delta_k) {
  u32 a = g.i == 0 ? h.x0 : h.x1;
  u32 b = g.i == 0 ? h.x1 : h.x0;
  return {(g.x0 + a) % k, (g.x1 + b) % k, (g.i + h.i) & 1u};
}

inline DeltaElement delta_inv(DeltaElement g, u32 k = delta_k) {
  u32 a = (k - g.x0 % k) % k;
  u32 b = (k - g.x1 % k) % k;
  if (g.i == 0) return {a, b, 0};
  return {b, a, 1};
}

inline bool delta_is_identity(DeltaElement g) { return g.x0 == 0 && g.x1 == 0 && g.i == 0; }

inline u32 delta_index(DeltaElement g, u32 k = delta_k) { return g.i + 2 * (g.x1 + k * g.x0); }

inline DeltaElement delta_unindex(u32 t, u32 k = delta_k) {
  DeltaElement g;
  g.i = t & 1u;
  t >>= 1;
  g.x1 = t % k;
  g.x0 = (t / k) % k;
  return g;
}

inline std::vector<DeltaElement> delta_all(u32 k = delta_k) {
  std::vector<DeltaElement> out;
  out.reserve(2 * k * k);
  for (u32 t = 0; t < 2 * k * k; ++t) out.push_back(delta_unindex(t, k));
  return out;
}

// A 107-element set S with S ∪ S^{-1} = Delta_10: it suffices to reach S from
// the identity in two generator steps to reach all of Delta_10.
inline std::vector<DeltaElement> transversal_S() {
  std::vector<DeltaElement> s;
  s.reserve(107);
  for (u32 j = 0; j <= 5; ++j) s.push_back({0, j, 0});
  for (u32 i = 1; i <= 5; ++i)
    for (u32 j = 0; j <= 10 - i; ++j) s.push_back({i, j, 0});
  for (u32 i = 6; i <= 8; ++i)
    for (u32 j = 1; j <= 9 - i; ++j) s.push_back({i, j, 0});
  s.push_back({0, 0, 1});
  for (u32 i = 1; i <= 9; ++i)
    for (u32 j = 0; j <= 10 - i; ++j) s.push_back({i, j, 1});
  return s;
}

struct GammaElement {
  u64 x0 = 0, x1 = 0;  // residues mod n
  u32 y0 = 0, y1 = 0;  // residues mod 10
  u32 i = 0;           // swap bit
  friend auto operator<=>(const GammaElement&, const GammaElement&) = default;
};

// Precomputed context for Gamma(n, alpha).  n = 1 is the degenerate case: the
// Z_n coordinates collapse and Gamma is Delta_10 itself (alpha recorded as 0).
struct GroupContext {
  u64 n = 1;
  u64 alpha = 0;
  std::array<u64, 10> alpha_pow{};      // alpha^e mod n
  std::array<u64, 10> alpha_inv_pow{};  // alpha^{-e} mod n

  u64 order() const { return 200 * n * n; }

  static GroupContext with_alpha(u64 n, u64 alpha) {
    GroupContext ctx;
    ctx.n = n;
    if (n == 1) return ctx;
    if (!modmath::detail::miller_rabin(n)) throw modmath::NotPrime(n);
    if (n % 10 != 1) throw modmath::WrongResidueClass(n);
    if (n > 303'700'049) throw std::overflow_error("group order exceeds 64 bits");
    if (modmath::element_order(alpha, n) != 10)
      throw std::invalid_argument("alpha must have multiplicative order 10");
    ctx.alpha = alpha % n;
    u64 ainv = modmath::inverse_mod(ctx.alpha, n);
    for (u32 e = 0; e < 10; ++e) {
      ctx.alpha_pow[e] = modmath::powmod(ctx.alpha, e, n);
      ctx.alpha_inv_pow[e] = modmath::powmod(ainv, e, n);
    }
    return ctx;
  }

  static GroupContext make(u64 n) {
    if (n == 1) return GroupContext{};
    return with_alpha(n, modmath::find_alpha(n).alpha);
  }
};

inline GammaElement gamma_identity() { return {}; }

inline bool gamma_is_identity(const GammaElement& g) {
  return g.x0 == 0 && g.x1 == 0 && g.y0 == 0 && g.y1 == 0 && g.i == 0;
}

inline GammaElement gamma_mul(const GammaElement& g, const GammaElement& h, const GroupContext& ctx) {
  u64 n = ctx.n;
  u64 hx0 = g.i == 0 ? h.x0 : h.x1;
  u64 hx1 = g.i == 0 ? h.x1 : h.x0;
  u32 hy0 = g.i == 0 ? h.y0 : h.y1;
  u32 hy1 = g.i == 0 ? h.y1 : h.y0;
  GammaElement r;
  r.x0 = (g.x0 + modmath::mulmod(ctx.alpha_pow[g.y0], hx0, n)) % n;
  r.x1 = (g.x1 + modmath::mulmod(ctx.alpha_pow[g.y1], hx1, n)) % n;
  r.y0 = (g.y0 + hy0) % 10;
  r.y1 = (g.y1 + hy1) % 10;
  r.i = (g.i + h.i) & 1u;
  return r;
}

inline GammaElement gamma_inv(const GammaElement& g, const GroupContext& ctx) {
  u64 n = ctx.n;
  u64 m0 = modmath::mulmod(ctx.alpha_inv_pow[g.y0], (n - g.x0 % n) % n, n);
  u64 m1 = modmath::mulmod(ctx.alpha_inv_pow[g.y1], (n - g.x1 % n) % n, n);
  GammaElement r;
  if (g.i == 0) {
    r.x0 = m0;
    r.x1 = m1;
    r.y0 = (10 - g.y0) % 10;
    r.y1 = (10 - g.y1) % 10;
    r.i = 0;
  } else {
    r.x0 = m1;
    r.x1 = m0;
    r.y0 = (10 - g.y1) % 10;
    r.y1 = (10 - g.y0) % 10;
    r.i = 1;
  }
  return r;
}

inline DeltaElement gamma_delta_part(const GammaElement& g) { return {g.y0, g.y1, g.i}; }

struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(u64 t) : std::out_of_range("vertex index out of range: " + std::to_string(t)) {}
};

inline u64 vertex_index(const GammaElement& g, const GroupContext& ctx) {
  return g.i + 2 * (g.y1 + 10 * (g.y0 + 10 * (g.x1 + ctx.n * g.x0)));
}

inline GammaElement vertex_unindex(u64 t, const GroupContext& ctx) {
  if (t >= ctx.order()) throw IndexOutOfRange(t);
  GammaElement g;
  g.i = u32(t & 1u);
  t >>= 1;
  g.y1 = u32(t % 10); t /= 10;
  g.y0 = u32(t % 10); t /= 10;
  g.x1 = t % ctx.n;
  g.x0 = t / ctx.n;
  return g;
}

}  // namespace gcay::groups
