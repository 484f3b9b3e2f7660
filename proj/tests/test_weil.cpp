#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "weilrep/errors.hpp"
#include "weilrep/weil.hpp"

using namespace weilrep;

namespace {

ExactMatrix flip(int n) {
  ExactMatrix m(n, n, n);
  for (int x = 0; x < n; ++x) m(x, (n - x) % n) = CycloNum(n, 1L);
  return m;
}

bool proportional(const ExactMatrix& a, const ExactMatrix& b) {
  std::size_t k = 0;
  while (k < b.data().size() && b.data()[k].is_zero()) ++k;
  if (k == b.data().size()) return false;
  CycloNum lambda = a.data()[k] / b.data()[k];
  return !lambda.is_zero() && a.equals(b * lambda);
}

}  // namespace

TEST(Dft, Examples) {
  EXPECT_TRUE(dft_matrix<CycloNum>(1).equals(ExactMatrix::identity(1, 1)));
  const ExactMatrix& f3 = dft_matrix<CycloNum>(3);
  ExactMatrix sq = f3 * f3;
  // F^2 delta_1 = 3 delta_2
  EXPECT_EQ(sq(2, 1), CycloNum(3, 3L));
  EXPECT_TRUE(sq(1, 1).is_zero());
  auto tr = f3.trace().embed();
  EXPECT_NEAR(tr.real(), 0.0, 1e-12);
  EXPECT_NEAR(tr.imag(), std::sqrt(3.0), 1e-12);
  EXPECT_THROW(dft_matrix<CycloNum>(9, 3), NotAUnit);
}

TEST(Dft, FourthPowerIsScalar) {
  for (int n = 1; n <= 15; n += 2) {
    for (int a = 1; a < std::max(n, 2); ++a) {
      if (std::gcd(a, n) != 1) continue;
      const ExactMatrix& f = dft_matrix<CycloNum>(n, a);
      EXPECT_TRUE(f.equals(f.transpose()));
      EXPECT_TRUE((f * f).equals(flip(n) * CycloNum(n, static_cast<long>(n))));
      EXPECT_TRUE(matrix_power(f, 4).equals(ExactMatrix::identity(n, n) * CycloNum(n, static_cast<long>(n * n))));
    }
  }
}

TEST(Decompose, Examples) {
  EXPECT_TRUE(decompose(Sl2Elem::identity(7)).empty());
  ElemWord w = decompose(Sl2Elem::weyl(7));
  ElemWord expected{ElemFactor::upper(Residue(1, 7)), ElemFactor::lower(Residue(-1, 7)),
                    ElemFactor::upper(Residue(1, 7))};
  EXPECT_EQ(w, expected);
  EXPECT_EQ(decompose(Sl2Elem::lower(Residue(3, 15))), ElemWord{ElemFactor::lower(Residue(3, 15))});
  EXPECT_EQ(decompose(Sl2Elem::lower(Residue(2, 15))), ElemWord{ElemFactor::lower(Residue(2, 15))});
  EXPECT_EQ(decompose(Sl2Elem::upper(Residue(6, 15))), ElemWord{ElemFactor::upper(Residue(6, 15))});
}

TEST(Decompose, ReproducesEveryElement) {
  std::mt19937_64 rng(5);
  for (int n : {1, 3, 5, 9, 15, 25, 45}) {
    for (int k = 0; k < 300; ++k) {
      Sl2Elem g = random_sl2(n, rng);
      ElemWord w = decompose(g);
      EXPECT_LE(w.size(), 4U);
      EXPECT_EQ(word_product(w, n), g);
      Residue s(static_cast<std::int64_t>(rng() % n), n);
      EXPECT_EQ(word_product(decompose_with_shift(g, s), n), g);
    }
  }
}

TEST(RhoLower, Examples) {
  EXPECT_TRUE(rho_lower<CycloNum>(Residue(0, 7)).equals(ExactMatrix::identity(7, 7)));
  EXPECT_EQ(rho_lower<CycloNum>(Residue(1, 5))(1, 1), zeta(5, 2));
}

TEST(RhoWeyl, NormalisationAndOrder) {
  for (int n = 1; n <= 15; n += 2) {
    const ExactMatrix& w = rho_weyl<CycloNum>(n);
    EXPECT_TRUE(matrix_power(w, 4).equals(ExactMatrix::identity(n, n))) << n;
    const long sign = ((n - 1) / 2) % 2 == 0 ? 1 : -1;
    EXPECT_TRUE((w * w).equals(flip(n) * CycloNum(n, sign))) << n;
    EXPECT_TRUE((w * rho_weyl_inverse<CycloNum>(n)).equals(ExactMatrix::identity(n, n)));
    EXPECT_TRUE(det_exact(w).is_one()) << n;
    EXPECT_TRUE(dft_matrix<CycloNum>(n).equals(w * proportionality_constant<CycloNum>(n)));
  }
  auto c3 = proportionality_constant<CycloNum>(3).embed();
  EXPECT_NEAR(c3.imag(), std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(proportionality_constant<Complex>(5).real(), -std::sqrt(5.0), 1e-9);
}

TEST(Rho, Examples) {
  for (int n : {3, 5, 7, 9}) {
    EXPECT_TRUE(rho<CycloNum>(Sl2Elem::identity(n)).matrix.equals(ExactMatrix::identity(n, n)));
    EXPECT_TRUE(rho<CycloNum>(Sl2Elem::weyl(n)).matrix.equals(rho_weyl<CycloNum>(n)));
    const long sign = ((n - 1) / 2) % 2 == 0 ? 1 : -1;
    EXPECT_TRUE(rho<CycloNum>(Sl2Elem(-1, 0, 0, -1, n)).matrix.equals(flip(n) * CycloNum(n, sign)));
  }
}

TEST(Rho, EgorovRelation) {
  std::mt19937_64 rng(6);
  for (int n : {3, 5, 7, 9, 15}) {
    for (int k = 0; k < 20; ++k) {
      Sl2Elem g = random_sl2(n, rng);
      ExactMatrix r = rho<CycloNum>(g).matrix;
      for (const HeisPoint& h : {HeisPoint(1, 0, 0, n), HeisPoint(0, 1, 0, n), random_heis(n, rng)}) {
        EXPECT_TRUE((r * pi_matrix<CycloNum>(h)).equals(pi_matrix<CycloNum>(sl2_act(g, h)) * r));
      }
    }
  }
}

TEST(Rho, HomomorphismAndWordIndependence) {
  std::mt19937_64 rng(7);
  for (int n : {5, 7, 11, 13, 25}) {
    for (int k = 0; k < 10; ++k) {
      Sl2Elem g1 = random_sl2(n, rng), g2 = random_sl2(n, rng);
      EXPECT_TRUE((rho<CycloNum>(g1).matrix * rho<CycloNum>(g2).matrix).equals(rho<CycloNum>(g1 * g2).matrix)) << n;
      Residue s(static_cast<std::int64_t>(rng() % n), n);
      EXPECT_TRUE(rho_word<CycloNum>(decompose_with_shift(g1, s), n).equals(rho<CycloNum>(g1).matrix));
    }
  }
}

TEST(Rho, TorusLaw) {
  for (int n : {5, 7, 15}) {
    for (int a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      Residue u(a, n);
      ExactMatrix expected = substitution_operator<CycloNum>(u) * CycloNum(n, static_cast<long>(jacobi(a, n)));
      EXPECT_TRUE(rho<CycloNum>(Sl2Elem::diag(u)).matrix.equals(expected)) << n << " " << a;
    }
  }
}

TEST(Rho, FloatBackendMatchesExact) {
  std::mt19937_64 rng(8);
  for (int n : {5, 9, 15}) {
    for (int k = 0; k < 5; ++k) {
      Sl2Elem g = random_sl2(n, rng);
      EXPECT_LE(to_float(rho<CycloNum>(g).matrix).max_abs_diff(rho<Complex>(g).matrix), default_tolerance(n));
    }
  }
}

TEST(Intertwiner, MatchesConstruction) {
  for (int n : {3, 5, 7}) {
    EXPECT_TRUE(intertwiner_solve(Sl2Elem::identity(n)).equals(ExactMatrix::identity(n, n)));
    EXPECT_TRUE(proportional(intertwiner_solve(Sl2Elem::weyl(n)), dft_matrix<CycloNum>(n)));
  }
  std::mt19937_64 rng(9);
  for (int n : {5, 7, 9}) {
    for (int k = 0; k < 20; ++k) {
      Sl2Elem g = random_sl2(n, rng);
      EXPECT_TRUE(proportional(intertwiner_solve(g), rho<CycloNum>(g).matrix));
    }
  }
}

TEST(Cayley, Examples) {
  const Sl2Elem w = Sl2Elem::weyl(7);
  EXPECT_EQ(cayley(w.matrix()), (Mat2{Residue(0, 7), Residue(-1, 7), Residue(1, 7), Residue(0, 7)}));
  EXPECT_EQ(cayley(Sl2Elem(-1, 0, 0, -1, 7).matrix()), Mat2::zero(7));
  EXPECT_THROW(cayley(Mat2::identity(7)), Singular);
  std::mt19937_64 rng(10);
  int tested = 0;
  while (tested < 50) {
    Sl2Elem g = random_sl2(7, rng);
    const Mat2 gm = g.matrix() - Mat2::identity(7);
    if (!gm.det().is_unit()) continue;
    ++tested;
    EXPECT_EQ(cayley(g.matrix()) + Mat2::identity(7), 2 * (g.matrix() * gm.inverse()));
  }
}

TEST(Character, Formula) {
  EXPECT_EQ(char_formula_check<CycloNum>(Sl2Elem::weyl(5)).predicted, -1);
  EXPECT_EQ(char_formula_check<CycloNum>(Sl2Elem::weyl(5)).computed, CycloNum(5, -1L));
  EXPECT_THROW(char_formula_check<CycloNum>(Sl2Elem::identity(5)), Singular);
  EXPECT_THROW(char_formula_check<CycloNum>(Sl2Elem::weyl(9)), NotPrime);
  std::mt19937_64 rng(11);
  for (int p : {7, 11}) {
    for (int k = 0; k < 20; ++k) {
      Sl2Elem g = random_sl2(p, rng);
      if (!(g.matrix() - Mat2::identity(p)).det().is_unit()) continue;
      auto value = char_formula_check<CycloNum>(g);
      EXPECT_EQ(value.computed, CycloNum(p, static_cast<long>(value.predicted)));
    }
  }
}

TEST(ChTau, ClosedFormAndConvolution) {
  std::mt19937_64 rng(12);
  const int p = 5;
  Sl2Elem g = Sl2Elem::weyl(p);
  EXPECT_EQ(ch_tau<CycloNum>(g, HeisPoint(0, 0, 0, p)), rho<CycloNum>(g).matrix.trace());
  EXPECT_EQ(ch_tau<CycloNum>(g, HeisPoint(0, 0, 2, p)), rho<CycloNum>(g).matrix.trace() * zeta(p, 2));
  int tested = 0;
  while (tested < 20) {
    Sl2Elem h_g = random_sl2(p, rng);
    if (!(h_g.matrix() - Mat2::identity(p)).det().is_unit()) continue;
    ++tested;
    HeisPoint h = random_heis(p, rng);
    EXPECT_EQ(ch_tau<CycloNum>(h_g, h), ch_tau_closed_form<CycloNum>(h_g, h));
  }
  for (int k = 0; k < 5; ++k) {
    Sl2Elem g1 = random_sl2(p, rng), g2 = random_sl2(p, rng);
    HeisPoint h = random_heis(p, rng);
    EXPECT_EQ(ch_tau<CycloNum>(g1 * g2, h), ch_tau_convolution<CycloNum>(g1, g2, h));
    EXPECT_LT(std::abs(ch_tau<Complex>(g1 * g2, h) - ch_tau_convolution<Complex>(g1, g2, h)), 1e-6);
  }
}

TEST(Tensor, CrtPermutation) {
  ExactMatrix p = crt_perm_matrix<CycloNum>(3, 5);
  EXPECT_TRUE(p(7, 7).is_one());
  EXPECT_TRUE((p * p.transpose()).equals(ExactMatrix::identity(15, 15)));
  EXPECT_TRUE(crt_perm_matrix<CycloNum>(1, 7).equals(ExactMatrix::identity(7, 7)));
  EXPECT_THROW(crt_perm_matrix<CycloNum>(3, 9), NotCoprime);
  ExactMatrix m = dft_matrix<CycloNum>(15, 2);
  EXPECT_TRUE(crt_conjugate(m, 3, 5).equals(p * m * p.transpose()));
}

TEST(Tensor, DftFactorisation) {
  EXPECT_EQ(tensor_dft_check(3, 5).a, 8);
  EXPECT_TRUE(tensor_dft_check(3, 5).pass);
  EXPECT_TRUE(tensor_dft_check(3, 7).pass);
  EXPECT_EQ(tensor_dft_check(3, 7).a, 10);
  EXPECT_TRUE(tensor_dft_check(5, 7).pass);
  EXPECT_TRUE(tensor_dft_check(1, 9).pass);
}

TEST(Tensor, WeilFactorisation) {
  auto id = tensor_weil_check<CycloNum>(5, 7, Sl2Elem::identity(35));
  EXPECT_TRUE(id.proportional);
  EXPECT_TRUE(id.lambda.is_one());
  std::mt19937_64 rng(13);
  for (int k = 0; k < 3; ++k) {
    auto r = tensor_weil_check<CycloNum>(5, 7, random_sl2(35, rng));
    EXPECT_TRUE(r.proportional);
    EXPECT_TRUE(r.lambda.is_one());
  }
  auto w = tensor_weil_check<CycloNum>(3, 5, Sl2Elem::weyl(15));
  EXPECT_TRUE(w.proportional);
  EXPECT_NEAR(w.abs_lambda, 1.0, 1e-12);
  auto f = tensor_weil_check<Complex>(3, 5, Sl2Elem::weyl(15), default_tolerance(15));
  EXPECT_TRUE(f.proportional);
}
