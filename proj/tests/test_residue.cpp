#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "weilrep/errors.hpp"
#include "weilrep/residue.hpp"

using namespace weilrep;

namespace {

// square enumeration, independent of Euler's criterion
int legendre_by_squares(std::int64_t a, std::int64_t p) {
  a = mod_floor(a, p);
  if (a == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x) {
    if (x * x % p == a) return 1;
  }
  return -1;
}

}  // namespace

TEST(Residue, InverseExamples) {
  EXPECT_EQ(inv(Residue(2, 5)).value(), 3);
  EXPECT_EQ(inv(Residue(1, 9)).value(), 1);
  EXPECT_EQ(inv(Residue(4, 9)).value(), 7);
  EXPECT_THROW(inv(Residue(3, 9)), NotAUnit);
}

TEST(Residue, InverseExhaustive) {
  for (std::int64_t n = 1; n <= 45; n += 2) {
    for (std::int64_t a = 0; a < n; ++a) {
      Residue r(a, n);
      if (std::gcd(a, n) == 1) {
        EXPECT_EQ((r * inv(r)).value(), 1 % n);
      } else {
        EXPECT_THROW(inv(r), NotAUnit);
      }
    }
  }
}

TEST(Residue, RejectsEvenModulus) {
  EXPECT_THROW(Residue(1, 4), InvalidParams);
  EXPECT_THROW(Residue(1, 0), InvalidParams);
  EXPECT_EQ(Residue(-1, 7).value(), 6);
}

TEST(Residue, MixedModuliThrow) {
  EXPECT_THROW(Residue(1, 3) + Residue(1, 5), ModulusMismatch);
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre(2, 7), 1);
  EXPECT_EQ(legendre(3, 5), -1);
  EXPECT_EQ(legendre(1, 11), 1);
  EXPECT_EQ(legendre(0, 11), 0);
  EXPECT_THROW(legendre(2, 9), NotPrime);
  EXPECT_THROW(legendre(2, 2), NotPrime);
}

TEST(Legendre, MatchesSquareEnumerationAndIsMultiplicative) {
  for (auto p : odd_primes_up_to(23)) {
    for (std::int64_t a = 0; a < p; ++a) {
      EXPECT_EQ(legendre(a, p), legendre_by_squares(a, p)) << a << " mod " << p;
      EXPECT_EQ(mod_floor(legendre(a, p), p),
                static_cast<std::int64_t>(pow_mod(a, (p - 1) / 2, p)));
      for (std::int64_t b = 1; b < p; ++b) {
        if (a == 0) continue;
        EXPECT_EQ(legendre(a * b, p), legendre(a, p) * legendre(b, p));
      }
    }
  }
}

TEST(Jacobi, Examples) {
  EXPECT_EQ(jacobi(2, 15), 1);
  EXPECT_EQ(jacobi(5, 1), 1);
  EXPECT_EQ(jacobi(4, 9), 1);
  EXPECT_EQ(jacobi(3, 9), 0);
  EXPECT_EQ(jacobi(2, 9), 1);
}

TEST(Jacobi, HomomorphismOnUnits) {
  for (std::int64_t n = 1; n <= 25; n += 2) {
    for (std::int64_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      EXPECT_NE(jacobi(a, n), 0);
      for (std::int64_t b = 1; b < n; ++b) {
        if (std::gcd(b, n) != 1) continue;
        EXPECT_EQ(jacobi(a * b, n), jacobi(a, n) * jacobi(b, n));
      }
    }
  }
}

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(15), (Factorization{{3, 1}, {5, 1}}));
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(9), (Factorization{{3, 2}}));
  EXPECT_EQ(factorize(360), (Factorization{{2, 3}, {3, 2}, {5, 1}}));
  for (std::int64_t n = 1; n < 2000; ++n) {
    std::int64_t prod = 1;
    std::int64_t last = 1;
    for (auto [p, k] : factorize(n)) {
      EXPECT_GT(p, last);
      EXPECT_TRUE(is_prime(p));
      last = p;
      for (int i = 0; i < k; ++i) prod *= p;
    }
    EXPECT_EQ(prod, n);
  }
}

TEST(Factorize, PhiAndSquarefree) {
  EXPECT_EQ(euler_phi(15), 8);
  EXPECT_EQ(euler_phi(25), 20);
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_TRUE(is_squarefree(15));
  EXPECT_FALSE(is_squarefree(9));
  EXPECT_EQ(odd_primes_up_to(23), (std::vector<std::int64_t>{3, 5, 7, 11, 13, 17, 19, 23}));
}

TEST(Crt, SplitExamples) {
  auto [a, b] = crt_split(Residue(7, 15), 3, 5);
  EXPECT_EQ(a, Residue(1, 3));
  EXPECT_EQ(b, Residue(2, 5));
  auto [z1, z2] = crt_split(Residue(0, 15), 3, 5);
  EXPECT_TRUE(z1.is_zero() && z2.is_zero());
  EXPECT_THROW(crt_split(Residue(1, 9), 3, 3), NotCoprime);
  EXPECT_THROW(crt_split(Residue(1, 15), 3, 7), ModulusMismatch);
}

TEST(Crt, RoundTripExhaustive) {
  for (std::int64_t n1 = 1; n1 <= 105; n1 += 2) {
    for (std::int64_t n2 = 1; n1 * n2 <= 105; n2 += 2) {
      if (std::gcd(n1, n2) != 1) continue;
      std::set<std::pair<std::int64_t, std::int64_t>> seen;
      for (std::int64_t x = 0; x < n1 * n2; ++x) {
        auto [a, b] = crt_split(Residue(x, n1 * n2), n1, n2);
        seen.emplace(a.value(), b.value());
        EXPECT_EQ(crt_combine_natural(a, b).value(), x);
      }
      EXPECT_EQ(static_cast<std::int64_t>(seen.size()), n1 * n2);
    }
  }
}

TEST(Crt, SplitIsRingHomomorphism) {
  for (std::int64_t x = 0; x < 15; ++x) {
    for (std::int64_t y = 0; y < 15; ++y) {
      Residue a(x, 15), b(y, 15);
      auto [s1, s2] = crt_split(a * b + a, 3, 5);
      auto [a1, a2] = crt_split(a, 3, 5);
      auto [b1, b2] = crt_split(b, 3, 5);
      EXPECT_EQ(s1, a1 * b1 + a1);
      EXPECT_EQ(s2, a2 * b2 + a2);
    }
  }
}

TEST(Crt, GaussCombine) {
  EXPECT_EQ(crt_combine_gauss(Residue(0, 3), Residue(0, 5)).value(), 0);
  EXPECT_EQ(crt_combine_gauss(Residue(1, 3), Residue(0, 5)).value(), 5);
  EXPECT_EQ(crt_combine_gauss(Residue(2, 3), Residue(3, 5)).value(), 4);
  EXPECT_THROW(crt_combine_gauss(Residue(1, 3), Residue(1, 9)), NotCoprime);
  std::set<std::int64_t> image;
  for (std::int64_t x = 0; x < 7; ++x) {
    for (std::int64_t y = 0; y < 11; ++y) {
      image.insert(crt_combine_gauss(Residue(x, 7), Residue(y, 11)).value());
    }
  }
  EXPECT_EQ(image.size(), 77U);
}

TEST(Crt, SolveSystem) {
  Residue r = crt_solve({Residue(1, 3), Residue(2, 5), Residue(3, 7)});
  EXPECT_EQ(r.modulus(), 105);
  EXPECT_EQ(r.value() % 3, 1);
  EXPECT_EQ(r.value() % 5, 2);
  EXPECT_EQ(r.value() % 7, 3);
}
