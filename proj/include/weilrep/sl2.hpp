#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <utility>

#include "weilrep/residue.hpp"

namespace weilrep {

/// A 2x2 matrix over Z/nZ, row-major.
struct Mat2 {
  Residue a, b, c, d;

  static Mat2 identity(std::int64_t n);
  static Mat2 zero(std::int64_t n);

  std::int64_t modulus() const { return a.modulus(); }
  Residue det() const { return a * d - b * c; }
  Residue trace() const { return a + d; }
  /// Throws Singular when det is not a unit.
  Mat2 inverse() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend Mat2 operator+(const Mat2& x, const Mat2& y);
  friend Mat2 operator-(const Mat2& x, const Mat2& y);
  friend Mat2 operator*(std::int64_t k, const Mat2& x);
  friend bool operator==(const Mat2&, const Mat2&) = default;

  std::pair<Residue, Residue> apply(const Residue& t, const Residue& w) const {
    return {a * t + b * w, c * t + d * w};
  }
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);

/// An element of SL2(Z/nZ).
class Sl2Elem {
 public:
  /// Throws InvalidParams unless ad - bc = 1.
  Sl2Elem(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t n);
  explicit Sl2Elem(const Mat2& m);

  static Sl2Elem identity(std::int64_t n);
  /// [[0, 1], [-1, 0]].
  static Sl2Elem weyl(std::int64_t n);
  static Sl2Elem upper(const Residue& b);
  static Sl2Elem lower(const Residue& c);
  /// diag(a, a^-1); throws NotAUnit.
  static Sl2Elem diag(const Residue& a);

  const Residue& a() const { return m_.a; }
  const Residue& b() const { return m_.b; }
  const Residue& c() const { return m_.c; }
  const Residue& d() const { return m_.d; }
  const Mat2& matrix() const { return m_; }
  std::int64_t modulus() const { return m_.modulus(); }
  Residue trace() const { return m_.trace(); }
  Sl2Elem inverse() const;
  /// Reduction mod a divisor of n.
  Sl2Elem reduce(std::int64_t divisor) const;

  friend Sl2Elem operator*(const Sl2Elem& x, const Sl2Elem& y) { return Sl2Elem(x.m_ * y.m_); }
  friend bool operator==(const Sl2Elem&, const Sl2Elem&) = default;

 private:
  Mat2 m_;
};

std::ostream& operator<<(std::ostream& os, const Sl2Elem& g);

/// Uniform sample by rejection.
Sl2Elem random_sl2(std::int64_t n, std::mt19937_64& rng);

}  // namespace weilrep
