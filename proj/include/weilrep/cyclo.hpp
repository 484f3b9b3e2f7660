#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace weilrep {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficients (low degree first) of the N-th cyclotomic polynomial, computed
/// by exact division of x^N - 1 by Phi_d for the proper divisors d of N.
const std::vector<std::int64_t>& cyclotomic_poly(int level);

namespace detail {

struct FieldData {
  int level = 1;
  int degree = 1;
  std::vector<std::int64_t> modulus;             // Phi_N, monic
  std::vector<std::vector<std::int64_t>> powers;  // x^k mod Phi_N, k < N
  std::int64_t max_power_coeff = 1;
};

/// Per-level tables, built once and shared between threads.
const FieldData& field_data(int level);

}  // namespace detail

/// An exact element of Q(zeta_N), stored as an integer polynomial of degree
/// < phi(N) over a positive common denominator. The representation is
/// canonical (reduced mod Phi_N, content coprime to the denominator), so
/// equality is coefficientwise.
class CycloNum {
 public:
  explicit CycloNum(int level = 1);
  CycloNum(int level, const Integer& value);
  CycloNum(int level, long value) : CycloNum(level, Integer(value)) {}

  static CycloNum rational(int level, const Rational& value);
  /// Any-length coefficient list; reduced mod Phi_N.
  static CycloNum from_coefficients(int level,
                                    const std::vector<Rational>& coeffs);
  static CycloNum from_integer_poly(int level, std::vector<Integer> numerators,
                                    Integer denominator = 1);

  int level() const { return level_; }
  int degree() const { return static_cast<int>(num_.size()); }
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }
  Rational coefficient(int k) const;
  std::vector<Rational> coefficients() const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  CycloNum& operator+=(const CycloNum& other);
  CycloNum& operator-=(const CycloNum& other);
  CycloNum& operator*=(const CycloNum& other);
  CycloNum& operator*=(const Rational& factor);
  CycloNum& operator/=(const CycloNum& other) { return *this *= other.inverse(); }
  CycloNum operator-() const;

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator*(CycloNum a, const Rational& r) { return a *= r; }
  friend CycloNum operator*(const Rational& r, CycloNum a) { return a *= r; }
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  /// Field inverse via the extended Euclidean algorithm against Phi_N.
  CycloNum inverse() const;
  /// The automorphism zeta -> zeta^u for a unit u mod N.
  CycloNum galois(std::int64_t u) const;
  /// Complex conjugation (zeta -> zeta^-1).
  CycloNum conj() const { return galois(-1); }
  /// Image in Q(zeta_M) for a multiple M of the level.
  CycloNum lift(int new_level) const;
  CycloNum pow(std::int64_t exponent) const;

  /// Value under zeta_N -> exp(2 pi i / N).
  std::complex<double> embed() const;
  std::complex<long double> embed_long() const;

  /// Human-readable form in z = zeta_N, e.g. "1 + 2*z - 1/3*z^4".
  std::string to_string() const;

 private:
  void normalize();

  int level_ = 1;
  std::vector<Integer> num_;
  Integer den_ = 1;
};

/// zeta_N^k.
CycloNum zeta(int level, std::int64_t k);

}  // namespace weilrep
