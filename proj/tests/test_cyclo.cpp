#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "weilrep/cyclo.hpp"
#include "weilrep/errors.hpp"
#include "weilrep/scalar.hpp"

using namespace weilrep;

TEST(Cyclotomic, KnownPolynomials) {
  EXPECT_EQ(cyclotomic_poly(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_poly(3), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(cyclotomic_poly(4), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_poly(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  // Phi_105 is the first with a coefficient of absolute value 2
  const auto& p105 = cyclotomic_poly(105);
  EXPECT_EQ(p105.size(), 49U);
  EXPECT_EQ(p105[7], -2);
}

TEST(Cyclotomic, RootsAreRootsNumerically) {
  for (int n = 1; n <= 60; ++n) {
    const auto& poly = cyclotomic_poly(n);
    std::complex<long double> z = std::polar(1.0L, 2.0L * std::numbers::pi_v<long double> / n);
    std::complex<long double> acc = 0, power = 1;
    for (auto c : poly) {
      acc += static_cast<long double>(c) * power;
      power *= z;
    }
    EXPECT_LT(std::abs(acc), 1e-9L) << n;
  }
}

TEST(Zeta, Examples) {
  auto i = zeta(4, 1).embed();
  EXPECT_NEAR(i.real(), 0.0, 1e-15);
  EXPECT_NEAR(i.imag(), 1.0, 1e-15);
  EXPECT_TRUE(zeta(7, 7).is_one());
  EXPECT_TRUE(zeta(7, 0).is_one());
  EXPECT_EQ(zeta(3, 1) + zeta(3, 2), CycloNum(3, -1L));
}

TEST(Zeta, HomomorphismExhaustive) {
  for (int n = 1; n <= 60; ++n) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; b += 7) {
        EXPECT_EQ(zeta(n, a) * zeta(n, b), zeta(n, a + b));
      }
      EXPECT_EQ(zeta(n, a).pow(3), zeta(n, 3 * a));
    }
  }
}

TEST(CycloNum, FieldOperations) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int level : {3, 5, 12, 15, 21}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> ca, cb;
      for (int k = 0; k < level; ++k) {
        ca.emplace_back(coef(rng), 1 + (trial % 3));
        cb.emplace_back(coef(rng));
      }
      CycloNum a = CycloNum::from_coefficients(level, ca);
      CycloNum b = CycloNum::from_coefficients(level, cb);
      auto ea = a.embed(), eb = b.embed();
      EXPECT_LT(std::abs((a * b).embed() - ea * eb), 1e-9 * (1 + std::abs(ea * eb)));
      EXPECT_LT(std::abs((a + b).embed() - (ea + eb)), 1e-9 * (1 + std::abs(ea + eb)));
      EXPECT_LT(std::abs(a.conj().embed() - std::conj(ea)), 1e-9 * (1 + std::abs(ea)));
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one());
        EXPECT_EQ((a * b) / a, b);
      }
      EXPECT_EQ(a.lift(2 * level).lift(4 * level), a.lift(4 * level));
      EXPECT_EQ((a * b).lift(3 * level), a.lift(3 * level) * b.lift(3 * level));
    }
  }
}

TEST(CycloNum, InverseOfZeroThrows) {
  EXPECT_THROW(CycloNum(5).inverse(), Singular);
}

TEST(CycloNum, LevelMismatchThrows) {
  EXPECT_THROW((void)(zeta(3, 1) == zeta(5, 1)), ModulusMismatch);
}

TEST(CycloNum, GaloisAction) {
  for (int u : {1, 2, 4, 7, 8, 11, 13, 14}) {
    EXPECT_EQ(zeta(15, 1).galois(u), zeta(15, u));
  }
  CycloNum x = zeta(5, 1) + zeta(5, 4);
  EXPECT_EQ(x.galois(-1), x);
  EXPECT_TRUE((x * x + x - CycloNum(5, 1L)).is_zero());  // 2cos(2pi/5) = golden ratio - 1
}

TEST(CycloNum, StringForm) {
  EXPECT_EQ(CycloNum(5).to_string(), "0");
  EXPECT_EQ(CycloNum(5, 3L).to_string(), "3");
  EXPECT_EQ((zeta(7, 1) * Rational(-1, 3)).to_string(), "-1/3*z");
}

TEST(Backend, Names) {
  EXPECT_EQ(to_string(Backend::Exact), "exact");
  EXPECT_EQ(backend_from_string("float"), Backend::Float);
  EXPECT_THROW(backend_from_string("double"), InvalidParams);
}
