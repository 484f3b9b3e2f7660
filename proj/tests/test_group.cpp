#include <gtest/gtest.h>

#include <random>

#include "weilrep/errors.hpp"
#include "weilrep/group.hpp"
#include "weilrep/weil.hpp"

using namespace weilrep;

TEST(Sl2Table, Orders) {
  EXPECT_EQ(enumerate_sl2(1).elements.size(), 1U);
  EXPECT_EQ(enumerate_sl2(3).elements.size(), 24U);
  EXPECT_EQ(enumerate_sl2(5).elements.size(), 120U);
  for (std::int64_t n : {1, 3, 5, 7, 9, 11, 13, 15}) {
    auto table = enumerate_sl2(n);
    EXPECT_EQ(static_cast<std::int64_t>(table.elements.size()), sl2_order(n));
    // independent count: matrices with det 1 by direct scan
    std::int64_t count = 0;
    for (std::int64_t x = 0; x < n * n * n * n; ++x) {
      std::int64_t a = x % n, b = x / n % n, c = x / n / n % n, d = x / n / n / n;
      if ((a * d - b * c - 1) % n == 0) ++count;
    }
    EXPECT_EQ(count, sl2_order(n));
  }
  EXPECT_THROW(enumerate_sl2(49), TooLarge);
}

TEST(Sl2Table, Closed) {
  auto table = enumerate_sl2(9);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 200; ++k) {
    const auto& g = table.elements[rng() % table.elements.size()];
    const auto& h = table.elements[rng() % table.elements.size()];
    EXPECT_LT(table.index_of(g * h), table.elements.size());
  }
}

TEST(Abelianization, Exponents) {
  EXPECT_EQ(abelianization_exponent(5), 1);
  EXPECT_EQ(abelianization_exponent(7), 1);
  EXPECT_EQ(abelianization_exponent(3), 3);
  for (std::int64_t n : {3, 5, 7, 9, 15}) EXPECT_EQ(n % abelianization_exponent(n), 0) << n;
}

TEST(RegularSemisimple, Examples) {
  for (std::int64_t n : {3, 5, 15, 21}) EXPECT_TRUE(is_regular_semisimple(Sl2Elem::weyl(n)));
  EXPECT_FALSE(is_regular_semisimple(Sl2Elem::identity(7)));
  EXPECT_FALSE(is_regular_semisimple(Sl2Elem::lower(Residue(1, 7))));
  // trace 2 mod 3 only
  EXPECT_FALSE(is_regular_semisimple(Sl2Elem(1, 1, 0, 1, 15) * Sl2Elem::diag(Residue(4, 15))));
}

TEST(Conjugator, Examples) {
  const Sl2Elem w15 = Sl2Elem::weyl(15);
  const Mat2 s{Residue(8, 15), Residue(0, 15), Residue(0, 15), Residue(1, 15)};
  Sl2Elem g = find_conjugator(w15, s);
  EXPECT_EQ(g * w15 * g.inverse(), Sl2Elem(s * w15.matrix() * s.inverse()));
  const Mat2 s5{Residue(2, 5), Residue(0, 5), Residue(0, 5), Residue(1, 5)};
  EXPECT_NO_THROW(find_conjugator(Sl2Elem::weyl(5), s5));
  EXPECT_THROW(find_conjugator(Sl2Elem::identity(5), s5), NotRegularSemisimple);
  EXPECT_THROW(find_conjugator(Sl2Elem::weyl(9), Mat2::identity(9)), InvalidParams);
}
