#include "weilrep/residue.hpp"

#include <numeric>
#include <string>
#include <tuple>

#include "weilrep/errors.hpp"

namespace weilrep {

Residue::Residue(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 1 || modulus % 2 == 0) {
    throw InvalidParams("modulus must be odd and >= 1, got " +
                        std::to_string(modulus));
  }
  value_ = mod_floor(value, modulus);
}

bool Residue::is_unit() const { return std::gcd(value_, modulus_) == 1; }

void Residue::require_same_modulus(const Residue& other) const {
  if (modulus_ != other.modulus_) {
    throw ModulusMismatch(std::to_string(modulus_) + " vs " +
                          std::to_string(other.modulus_));
  }
}

Residue& Residue::operator+=(const Residue& other) {
  require_same_modulus(other);
  value_ = mod_floor(value_ + other.value_, modulus_);
  return *this;
}

Residue& Residue::operator-=(const Residue& other) {
  require_same_modulus(other);
  value_ = mod_floor(value_ - other.value_, modulus_);
  return *this;
}

Residue& Residue::operator*=(const Residue& other) {
  require_same_modulus(other);
  auto prod = static_cast<__int128>(value_) * other.value_;
  value_ = static_cast<std::int64_t>(prod % modulus_);
  return *this;
}

Residue Residue::pow(std::uint64_t exponent) const {
  return Residue(static_cast<std::int64_t>(pow_mod(
                     static_cast<std::uint64_t>(value_), exponent,
                     static_cast<std::uint64_t>(modulus_))),
                 modulus_);
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.value() << " mod " << r.modulus();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t modulus) {
  if (modulus == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % modulus;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b % modulus;
    b = b * b % modulus;
    exponent >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

Factorization factorize(std::int64_t n) {
  if (n < 1) throw InvalidParams("factorize expects n >= 1");
  Factorization out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.push_back({p, k});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto& pk : factorize(n)) out.push_back(pk.prime);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_squarefree(std::int64_t n) {
  for (const auto& pk : factorize(n)) {
    if (pk.exponent > 1) return false;
  }
  return true;
}

std::vector<std::int64_t> odd_primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 3; p <= bound; p += 2) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (const auto& pk : factorize(n)) result = result / pk.prime * (pk.prime - 1);
  return result;
}

namespace {

// Extended Euclid: returns (g, x) with a*x = g (mod m).
std::pair<std::int64_t, std::int64_t> ext_gcd(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  return {old_r, old_s};
}

}  // namespace

Residue inv(const Residue& a) {
  auto [g, x] = ext_gcd(a.value(), a.modulus());
  if (g != 1) {
    throw NotAUnit(std::to_string(a.value()) + " mod " +
                   std::to_string(a.modulus()));
  }
  return Residue(x, a.modulus());
}

int legendre(std::int64_t a, std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw NotPrime(std::to_string(p));
  std::int64_t r = mod_floor(a, p);
  if (r == 0) return 0;
  auto e = pow_mod(static_cast<std::uint64_t>(r),
                   static_cast<std::uint64_t>((p - 1) / 2),
                   static_cast<std::uint64_t>(p));
  return e == 1 ? 1 : -1;
}

int legendre(const Residue& a, std::int64_t p) { return legendre(a.value(), p); }

int jacobi(std::int64_t a, std::int64_t n) {
  if (n < 1 || n % 2 == 0) throw InvalidParams("jacobi expects odd n >= 1");
  int result = 1;
  for (const auto& pk : factorize(n)) {
    int l = legendre(a, pk.prime);
    for (int k = 0; k < pk.exponent; ++k) result *= l;
  }
  return result;
}

int jacobi(const Residue& a) { return jacobi(a.value(), a.modulus()); }

std::pair<Residue, Residue> crt_split(const Residue& x, std::int64_t n1,
                                      std::int64_t n2) {
  if (std::gcd(n1, n2) != 1) {
    throw NotCoprime(std::to_string(n1) + ", " + std::to_string(n2));
  }
  if (x.modulus() != n1 * n2) {
    throw ModulusMismatch("crt_split expects a residue mod n1*n2");
  }
  return {Residue(x.value(), n1), Residue(x.value(), n2)};
}

Residue crt_solve(const std::vector<Residue>& parts) {
  std::int64_t modulus = 1;
  std::int64_t value = 0;
  for (const auto& part : parts) {
    std::int64_t m = part.modulus();
    if (std::gcd(modulus, m) != 1) {
      throw NotCoprime(std::to_string(modulus) + ", " + std::to_string(m));
    }
    // value + modulus * k = part (mod m)
    Residue k = (part - Residue(value, m)) * inv(Residue(modulus, m));
    value += modulus * k.value();
    modulus *= m;
  }
  return Residue(value, modulus);
}

Residue crt_combine_natural(const Residue& x1, const Residue& x2) {
  return crt_solve({x1, x2});
}

Residue crt_combine_gauss(const Residue& x, const Residue& y) {
  std::int64_t p = x.modulus();
  std::int64_t q = y.modulus();
  if (std::gcd(p, q) != 1) {
    throw NotCoprime(std::to_string(p) + ", " + std::to_string(q));
  }
  return Residue(x.value() * q + y.value() * p, p * q);
}

}  // namespace weilrep
