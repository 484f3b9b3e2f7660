#pragma once

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

namespace weilrep {

/// Reduces `value` into [0, modulus).
constexpr std::int64_t mod_floor(std::int64_t value, std::int64_t modulus) {
  std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

/// An element of Z/nZ for odd n >= 1.
class Residue {
 public:
  Residue() = default;
  Residue(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }

  bool is_unit() const;
  bool is_zero() const { return value_ == 0; }

  Residue operator-() const { return Residue(-value_, modulus_); }
  Residue& operator+=(const Residue& other);
  Residue& operator-=(const Residue& other);
  Residue& operator*=(const Residue& other);
  Residue pow(std::uint64_t exponent) const;

  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend Residue operator*(Residue a, std::int64_t k) {
    return a *= Residue(k, a.modulus());
  }
  friend Residue operator*(std::int64_t k, Residue a) { return a * k; }
  friend Residue operator+(Residue a, std::int64_t k) {
    return a += Residue(k, a.modulus());
  }
  friend Residue operator-(Residue a, std::int64_t k) {
    return a -= Residue(k, a.modulus());
  }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  void require_same_modulus(const Residue& other) const;

  std::int64_t value_ = 0;
  std::int64_t modulus_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

struct PrimePower {
  std::int64_t prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: primes strictly increasing, exponents >= 1.
using Factorization = std::vector<PrimePower>;

Factorization factorize(std::int64_t n);
std::vector<std::int64_t> prime_divisors(std::int64_t n);
bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);
std::vector<std::int64_t> odd_primes_up_to(std::int64_t bound);
std::int64_t euler_phi(std::int64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t modulus);

/// Multiplicative inverse; throws NotAUnit when gcd(a, n) != 1.
Residue inv(const Residue& a);

/// Legendre symbol by Euler's criterion. Throws NotPrime unless p is an odd
/// prime.
int legendre(std::int64_t a, std::int64_t p);
int legendre(const Residue& a, std::int64_t p);

/// Jacobi symbol as the product of Legendre symbols over the factorization of
/// n (with multiplicity). Reciprocity is not used.
int jacobi(std::int64_t a, std::int64_t n);
int jacobi(const Residue& a);

/// Natural CRT reduction Z/(n1 n2) -> Z/n1 x Z/n2.
std::pair<Residue, Residue> crt_split(const Residue& x, std::int64_t n1,
                                      std::int64_t n2);
/// Inverse of crt_split.
Residue crt_combine_natural(const Residue& x1, const Residue& x2);
/// The map (x, y) -> x*q + y*p from Z/p x Z/q to Z/pq.
Residue crt_combine_gauss(const Residue& x, const Residue& y);

/// Solves x = r_i (mod m_i) for pairwise coprime m_i.
Residue crt_solve(const std::vector<Residue>& parts);

}  // namespace weilrep
