#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <iostream>
#include <numeric>

#include "gcay/bounds.hpp"
#include "gcay/cayley.hpp"
#include "gcay/search.hpp"

// Acceptance gate: one test per criterion, one PASS/FAIL line each on stdout.

using namespace gcay;
using groups::DeltaElement;
using groups::GammaElement;
using groups::GroupContext;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

const scheme::SearchResult& searched() {
  static scheme::SearchResult res = scheme::search(64, 2026);
  return res;
}

}  // namespace

class Acceptance : public ::testing::Test {
 protected:
  void criterion(int id, std::string label) {
    id_ = id;
    label_ = std::move(label);
  }
  void TearDown() override {
    std::cout << "[criterion " << id_ << "] " << (HasFailure() ? "FAIL" : "PASS") << " - "
              << label_ << "\n";
  }
  int id_ = 0;
  std::string label_;
};

TEST_F(Acceptance, C01_RecordGraphAtNEleven) {
  criterion(1, "n=11 search: order 24200 = (200/289)*187^2, degree 186, BFS diameter 2, < 10 s");
  Timer t;
  const auto& res = searched();
  auto ctx = GroupContext::with_alpha(11, 2);
  auto gr = cayley::build_graph(res.scheme, ctx);
  EXPECT_EQ(gr.order, 24200u);
  EXPECT_EQ(u128(200) * 187 * 187 / 289, u128(24200));
  EXPECT_LE(gr.degree(), 186u);
  EXPECT_EQ(gr.degree(), 186u);
  auto verdict = cayley::diameter2_verify(gr, cayley::VerifyMethod::bfs);
  EXPECT_TRUE(verdict.diameter2);
  EXPECT_EQ(cayley::eccentricity_from_identity(gr).eccentricity, 2u);
  EXPECT_LT(t.seconds(), 10.0);
}

TEST_F(Acceptance, C02_DegenerateCaseAtNOne) {
  criterion(2, "n=1: order 200, degree 16, diameter 2, ratio exactly 0.78125, < 1 s");
  Timer t;
  auto ctx = GroupContext::make(1);
  auto gr = cayley::build_graph(searched().scheme, ctx);
  EXPECT_EQ(gr.order, 200u);
  EXPECT_EQ(gr.degree(), 16u);
  EXPECT_TRUE(cayley::diameter2_verify(gr, cayley::VerifyMethod::bfs).diameter2);
  EXPECT_EQ(200.0 / (16.0 * 16.0), 0.78125);
  auto rep = bounds::construction_bound(16);
  EXPECT_EQ(rep.ratio_num, u128(25));
  EXPECT_EQ(rep.ratio_den, u128(32));
  EXPECT_LT(t.seconds(), 1.0);
}

TEST_F(Acceptance, C03_ScalingCaseAtNThirtyOne) {
  criterion(3, "n=31 (alpha 27): order 192200, degree 526, BFS and certificate agree, < 60 s");
  Timer t;
  auto ctx = GroupContext::make(31);
  EXPECT_EQ(ctx.alpha, 27u);
  const auto& res = searched();
  auto gr = cayley::build_graph(res.scheme, ctx);
  EXPECT_EQ(gr.order, 192200u);
  EXPECT_EQ(gr.degree(), 526u);
  auto verdict =
      cayley::diameter2_verify(gr, cayley::VerifyMethod::both, &res.scheme, &res.certificate);
  EXPECT_TRUE(verdict.diameter2);
  EXPECT_TRUE(verdict.methods_agree);
  EXPECT_LT(t.seconds(), 60.0);
}

TEST_F(Acceptance, C04_CertificateSoundnessAndMutationSuite) {
  criterion(4, "certificate implies BFS diameter 2 at n in {11, 31}; all mutants rejected");
  const auto& res = searched();
  for (u64 n : {11ull, 31ull}) {
    auto ctx = GroupContext::make(n);
    auto gr = cayley::build_graph(res.scheme, ctx);
    bool cert_ok = cayley::diameter2_verify(gr, cayley::VerifyMethod::certificate, &res.scheme,
                                            &res.certificate)
                       .diameter2;
    bool bfs_ok = cayley::diameter2_verify(gr, cayley::VerifyMethod::bfs).diameter2;
    EXPECT_TRUE(cert_ok) << "n=" << n;
    EXPECT_TRUE(bfs_ok) << "certificate verified but BFS disagrees at n=" << n;
  }

  // mutant 1: drop an entry
  {
    scheme::DiameterCertificate mut = res.certificate;
    mut.entries.erase(mut.entries.begin());
    EXPECT_FALSE(scheme::certificate_verify(mut, res.scheme));
  }
  // mutant 2: zero a determinant
  {
    scheme::DiameterCertificate mut = res.certificate;
    mut.entries[50].det = scheme::SymbolicSum{};
    EXPECT_FALSE(scheme::certificate_verify(mut, res.scheme));
  }
  // mutant 3: break the inverse-closure of the connection set
  {
    auto ctx = GroupContext::with_alpha(11, 2);
    auto X = scheme::expand_x(res.scheme, ctx);
    size_t victim = X.size();
    for (size_t i = 0; i < X.size(); ++i)
      if (groups::gamma_inv(X[i], ctx) != X[i]) {
        victim = i;
        break;
      }
    ASSERT_LT(victim, X.size());
    X.erase(X.begin() + long(victim));
    EXPECT_THROW(cayley::build_graph(X, ctx), cayley::InvalidGeneratingSet);
  }
}

TEST_F(Acceptance, C05_AlphaAndLambdaExhaustiveBelowTenThousand) {
  criterion(5, "every prime p = 1 mod 10 below 10^4: checks i-iv hold, Lambda all units, < 5 s");
  Timer t;
  auto ps = primes::class_primes(11, 9999);
  EXPECT_EQ(ps.size(), 306u);
  for (u64 p : ps) {
    auto cert = modmath::find_alpha(p);
    EXPECT_TRUE(cert.checks.all()) << "p=" << p;
    auto ls = modmath::lambda_set(p, cert.alpha);  // throws if any element is not a unit
    for (u64 v : ls.elements) {
      EXPECT_NE(v, 0u);
      EXPECT_EQ(std::gcd(v, p), 1u);
    }
  }
  EXPECT_LT(t.seconds(), 5.0);
}

TEST_F(Acceptance, C06_SteppingConstants) {
  criterion(6, "delta_min, regime-II threshold, and the asymptotic constant hit their pins");
  auto rep = primes::derive_constants();
  EXPECT_NEAR(rep.delta_min, 0.00558556, 1e-8);
  EXPECT_NEAR(rep.regime2_threshold, 4104075.014974, 0.01);
  double c = bounds::asymptotic_constant();
  EXPECT_GE(c, 0.684317);
  EXPECT_LE(c, 0.684320);
  EXPECT_GT(c, 0.684);
}

TEST_F(Acceptance, C07_RatioLimits) {
  criterion(7, "ratio_limits(200/289) = (0.66378, 0.79792) to five decimals");
  auto lims = bounds::ratio_limits(200.0 / 289.0);
  EXPECT_NEAR(lims.lower, 0.66378, 5e-6);
  EXPECT_NEAR(lims.upper, 0.79792, 5e-6);
  EXPECT_NEAR(lims.lower, 0.663782, 1.5e-6);
  EXPECT_NEAR(lims.upper, 0.797918, 1.5e-6);
}

TEST_F(Acceptance, C08_ChebyshevDeskCheck) {
  criterion(8, "|theta(y;10,1) - y/4| <= 1.412480 sqrt(y) for y = 10^3 .. 10^7, < 60 s");
  Timer t;
  for (double y : {1e3, 1e4, 1e5, 1e6, 1e7}) {
    double v = primes::theta(y, 10, 1);
    EXPECT_LE(std::abs(v - y / 4.0), 1.412480 * std::sqrt(y)) << "y=" << y;
  }
  EXPECT_LT(t.seconds(), 60.0);
}

TEST_F(Acceptance, C09_PrimeGapAudit) {
  criterion(9, "gap audit on [21221, 4.2e6]: max ratio <= 1.006; boundary pair reported, < 5 min");
  Timer t;
  auto rep = primes::gap_audit(21221, 4'200'000, 0.0055856);
  EXPECT_EQ(rep.checked_pairs, 73429u);
  EXPECT_FALSE(rep.max_ratio_exceeds(1.006));
  ASSERT_TRUE(rep.worst_pair.has_value());
  EXPECT_EQ(*rep.worst_pair, std::make_pair(u64(21221), u64(21341)));
  // the boundary pair is reported, not asserted either way
  bool boundary_violates = false;
  for (const auto& v : rep.violations) {
    EXPECT_EQ(v.first, 21221u) << "unexpected violation beyond the boundary pair";
    EXPECT_EQ(v.second, 21341u);
    boundary_violates = true;
  }
  std::cout << "[criterion 9] note: pair (21221, 21341) exceeds 1.0055856: "
            << (boundary_violates ? "yes" : "no") << "; worst pair (" << rep.worst_pair->first
            << ", " << rep.worst_pair->second << ") over " << rep.checked_pairs << " pairs\n";
  EXPECT_LT(t.seconds(), 300.0);
}

TEST_F(Acceptance, C10_GuaranteeBoundary) {
  criterion(10, "ratio > 0.684 across [360756, 370756]; bound(186) matches the built graph");
  for (u64 d = 360756; d <= 370756; d += 500) {
    auto rep = bounds::construction_bound(d);
    EXPECT_GT(rep.ratio_num * 1000, rep.ratio_den * 684) << "d=" << d;
  }
  auto ctx = GroupContext::with_alpha(11, 2);
  auto gr = cayley::build_graph(searched().scheme, ctx);
  EXPECT_EQ(bounds::construction_bound(186).order, u128(gr.order));
}

TEST_F(Acceptance, C11_GroupLawSuite) {
  criterion(11, "Delta_10 laws over all 200^3 triples; 10^5 random Gamma(11,2) triples, < 10 s");
  Timer t;
  auto all = groups::delta_all();
  ASSERT_EQ(all.size(), 200u);
  for (const auto& g : all) {
    EXPECT_EQ(groups::delta_mul(g, groups::delta_identity()), g);
    EXPECT_EQ(groups::delta_mul(groups::delta_identity(), g), g);
    EXPECT_TRUE(groups::delta_is_identity(groups::delta_mul(g, groups::delta_inv(g))));
    EXPECT_TRUE(groups::delta_is_identity(groups::delta_mul(groups::delta_inv(g), g)));
  }
  for (const auto& a : all)
    for (const auto& b : all) {
      DeltaElement ab = groups::delta_mul(a, b);
      for (const auto& c : all)
        if (groups::delta_mul(ab, c) != groups::delta_mul(a, groups::delta_mul(b, c))) {
          FAIL() << "associativity breaks";
        }
    }

  auto ctx = GroupContext::with_alpha(11, 2);
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100'000; ++it) {
    GammaElement a = groups::vertex_unindex(rng() % ctx.order(), ctx);
    GammaElement b = groups::vertex_unindex(rng() % ctx.order(), ctx);
    GammaElement c = groups::vertex_unindex(rng() % ctx.order(), ctx);
    if (groups::gamma_mul(groups::gamma_mul(a, b, ctx), c, ctx) !=
        groups::gamma_mul(a, groups::gamma_mul(b, c, ctx), ctx)) {
      FAIL() << "Gamma associativity breaks";
    }
  }

  // presentation relations: A^10 = B^2 = (AB)^2 (A^-1 B)^2 = 1
  DeltaElement A{1, 0, 0}, B{0, 0, 1};
  DeltaElement acc = groups::delta_identity();
  for (int k = 0; k < 10; ++k) acc = groups::delta_mul(acc, A);
  EXPECT_TRUE(groups::delta_is_identity(acc));
  EXPECT_TRUE(groups::delta_is_identity(groups::delta_mul(B, B)));
  DeltaElement AB = groups::delta_mul(A, B);
  DeltaElement AiB = groups::delta_mul(groups::delta_inv(A), B);
  DeltaElement rel = groups::delta_mul(groups::delta_mul(AB, AB), groups::delta_mul(AiB, AiB));
  EXPECT_TRUE(groups::delta_is_identity(rel));
  EXPECT_LT(t.seconds(), 10.0);
}

TEST_F(Acceptance, C12_Solve2x2OracleEquivalence) {
  criterion(12, "solve2x2 agrees with brute force over Z_6 and Z_11, all matrices and targets");
  for (u64 n : {6ull, 11ull}) {
    for (u64 a = 0; a < n; ++a)
      for (u64 b = 0; b < n; ++b)
        for (u64 c = 0; c < n; ++c)
          for (u64 d = 0; d < n; ++d) {
            std::vector<u64> count(n * n, 0);
            std::vector<std::pair<u64, u64>> sol(n * n);
            for (u64 x = 0; x < n; ++x)
              for (u64 y = 0; y < n; ++y) {
                u64 u = (a * x + b * y) % n;
                u64 v = (c * x + d * y) % n;
                count[u * n + v]++;
                sol[u * n + v] = {x, y};
              }
            u64 det = ((a * d) % n + n - (b * c) % n) % n;
            bool unit = det != 0 && std::gcd(det, n) == 1;
            for (u64 u = 0; u < n; ++u)
              for (u64 v = 0; v < n; ++v) {
                if (unit) {
                  ASSERT_EQ(count[u * n + v], 1u);
                  auto s = modmath::solve2x2(a, b, c, d, u, v, n);
                  ASSERT_EQ(std::make_pair(s.x, s.y), sol[u * n + v]);
                } else if (u == 0 && v == 0) {
                  ASSERT_GT(count[0], 1u);  // nontrivial kernel
                  ASSERT_THROW(modmath::solve2x2(a, b, c, d, 0, 0, n), modmath::SingularSystem);
                }
              }
          }
  }
}
