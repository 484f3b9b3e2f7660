#include <gtest/gtest.h>

#include <chrono>
#include <cmath>

#include "weilrep/errors.hpp"
#include "weilrep/theorems.hpp"

using namespace weilrep;

TEST(GaussSum, Examples) {
  EXPECT_TRUE(gauss_sum<CycloNum>(1).is_one());
  EXPECT_NEAR(gauss_sum<CycloNum>(5).embed().real(), 2.2360679774997896, 1e-12);
  EXPECT_NEAR(gauss_sum<CycloNum>(3).embed().imag(), 1.7320508075688772, 1e-12);
  EXPECT_THROW(gauss_sum<CycloNum>(9, 6), NotAUnit);
  EXPECT_LT(std::abs(gauss_sum<Complex>(7) - Complex(0, std::sqrt(7.0))), 1e-12);
}

TEST(GaussSum, SquareAndDichotomy) {
  for (auto p : odd_primes_up_to(23)) {
    const CycloNum g = gauss_sum<CycloNum>(p);
    EXPECT_EQ(g * g, CycloNum(p, static_cast<long>(legendre(-1, p) * p)));
  }
  for (std::int64_t n = 1; n <= 25; n += 2) {
    for (std::int64_t a = 1; a < std::max<std::int64_t>(n, 2); ++a) {
      if (std::gcd(a, n) != 1) continue;
      EXPECT_EQ(jacobi_via_gauss(n, a), jacobi(a, n)) << n << " " << a;
    }
    EXPECT_TRUE(gauss_trace_identity(n).pass) << n;
  }
  EXPECT_EQ(jacobi_via_gauss(15, 2), 1);
  EXPECT_EQ(jacobi_via_gauss(9, 2), 1);
}

TEST(GaussSum, ClosedFormsForComposites) {
  // observed for every odd n, not only primes
  for (std::int64_t n = 1; n <= 25; n += 2) {
    EXPECT_LT(std::abs(gauss_sum<CycloNum>(n).embed() - gauss_sum_closed_form(n)), 1e-9) << n;
  }
}

TEST(TechLemma, Exhaustive) {
  EXPECT_EQ(gauss_sum<CycloNum>(5, 2), -gauss_sum<CycloNum>(5));
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    for (std::int64_t a = 1; a < p; ++a) EXPECT_TRUE(tech_lemma_check(p, a).pass) << p << " " << a;
  }
}

TEST(IdentLemma, Pairs) {
  auto r = ident_lemma_check(3, 5);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.lhs.embed().imag(), std::sqrt(15.0), 1e-12);
  EXPECT_TRUE(ident_lemma_check(3, 7).pass);
  EXPECT_TRUE(ident_lemma_check(5, 7).pass);
  EXPECT_THROW(ident_lemma_check(3, 9), NotPrime);
}

TEST(Reciprocity, Examples) {
  auto v = qr_verify(3, 5);
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.rhs_parity, 1);
  v = qr_verify(3, 7);
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.lhs_trace_route, -1);
  v = qr_verify(5, 13);
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.lhs_direct, 1);
  EXPECT_EQ(legendre(5, 13), -1);
}

TEST(Reciprocity, FloatTraceRoute) {
  QrOptions opts;
  opts.trace_backend = Backend::Float;
  for (auto [p, q] : {std::pair{3, 5}, {5, 7}, {7, 13}}) {
    auto v = qr_verify(p, q, opts);
    EXPECT_TRUE(v.pass);
    ASSERT_TRUE(v.residual.has_value());
    EXPECT_LT(*v.residual, 1e-9);
  }
}

TEST(Reciprocity, Jacobi) {
  auto r = jacobi_reciprocity_check(9, 5);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.symbols, 1);
  EXPECT_TRUE(jacobi_reciprocity_check(3, 5).pass);
  EXPECT_TRUE(jacobi_reciprocity_check(15, 7).pass);
  EXPECT_THROW(jacobi_reciprocity_check(3, 9), NotCoprime);
}

TEST(Equivariance, Examples) {
  EXPECT_TRUE(equivariance_check(5, 1).pass);
  auto r = equivariance_check(5, 2);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.lhs.embed().real(), std::sqrt(5.0), 1e-12);
  EXPECT_TRUE(equivariance_check(15, 8).pass);
  EXPECT_EQ(equivariance_check(15, 8).lhs, proportionality_constant<CycloNum>(15));
}

TEST(GaussSign, Primes) {
  auto r5 = gauss_sign_check(5);
  EXPECT_TRUE(r5.pass);
  EXPECT_EQ(r5.symbol, -1);
  auto r3 = gauss_sign_check(3);
  EXPECT_TRUE(r3.pass);
  EXPECT_EQ(r3.symbol, 1);
  auto r7 = gauss_sign_check(7);
  EXPECT_TRUE(r7.pass);
  EXPECT_EQ(r7.symbol, -1);
  EXPECT_NEAR(proportionality_constant<CycloNum>(7).embed().imag(), -std::sqrt(7.0), 1e-12);
}

TEST(TraceProp, Pairs) {
  auto r = trace_prop_check(3, 5);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.lhs, CycloNum(15, -1L));
  EXPECT_TRUE(trace_prop_check(5, 7).pass);
  EXPECT_TRUE(trace_prop_check(3, 7).pass);
}
