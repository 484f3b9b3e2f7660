#include "weilrep/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>

#include "weilrep/errors.hpp"

namespace weilrep {
namespace detail {
namespace {

using IntPoly = std::vector<std::int64_t>;

// Exact quotient of a by a monic divisor b.
IntPoly exact_divide(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    std::int64_t c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

FieldData build_field(int level) {
  FieldData data;
  data.level = level;
  IntPoly poly(static_cast<std::size_t>(level) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(level)] = 1;
  for (int d = 1; d < level; ++d) {
    if (level % d == 0) poly = exact_divide(poly, cyclotomic_poly(d));
  }
  data.modulus = poly;
  data.degree = static_cast<int>(poly.size()) - 1;

  const auto deg = static_cast<std::size_t>(data.degree);
  IntPoly cur(deg, 0);
  cur[0] = 1;
  data.powers.reserve(static_cast<std::size_t>(level));
  for (int k = 0; k < level; ++k) {
    data.powers.push_back(cur);
    for (auto c : cur) data.max_power_coeff = std::max(data.max_power_coeff, std::abs(c));
    // multiply by x and reduce
    std::int64_t top = cur[deg - 1];
    for (std::size_t j = deg - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t j = 0; j < deg; ++j) cur[j] -= top * poly[j];
    }
  }
  return data;
}

std::shared_mutex& cache_mutex() {
  static std::shared_mutex m;
  return m;
}

std::map<int, std::unique_ptr<FieldData>>& cache() {
  static std::map<int, std::unique_ptr<FieldData>> c;
  return c;
}

}  // namespace

const FieldData& field_data(int level) {
  if (level < 1) throw InvalidParams("cyclotomic level must be >= 1");
  {
    std::shared_lock lock(cache_mutex());
    auto it = cache().find(level);
    if (it != cache().end()) return *it->second;
  }
  auto built = std::make_unique<FieldData>(build_field(level));
  std::unique_lock lock(cache_mutex());
  auto [it, inserted] = cache().try_emplace(level, std::move(built));
  return *it->second;
}

}  // namespace detail

const std::vector<std::int64_t>& cyclotomic_poly(int level) {
  return detail::field_data(level).modulus;
}

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Polynomial long division over Q; b must be nonzero and trimmed.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {RatPoly{}, a};
  RatPoly q(a.size() - b.size() + 1);
  const Rational lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    Rational c = a[i] / lead;
    q[i - (b.size() - 1)] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= c * b[j];
  }
  a.resize(b.size() - 1);
  trim(a);
  return {q, a};
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Adds c * x^k (reduced mod Phi_N) into the first `degree` slots of acc.
void add_power(std::vector<Integer>& acc, const detail::FieldData& fd,
               std::size_t k, const Integer& c) {
  const auto& row = fd.powers[k % static_cast<std::size_t>(fd.level)];
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 1) {
      acc[j] += c;
    } else if (row[j] == -1) {
      acc[j] -= c;
    } else if (row[j] != 0) {
      acc[j] += c * row[j];
    }
  }
}

// Reduces a wide integer polynomial mod Phi_N in place.
void reduce_wide(std::vector<Integer>& wide, const detail::FieldData& fd) {
  const auto deg = static_cast<std::size_t>(fd.degree);
  if (wide.size() <= deg) {
    wide.resize(deg);
    return;
  }
  for (std::size_t k = wide.size(); k-- > deg;) {
    if (wide[k] == 0) continue;
    Integer c = wide[k];
    add_power(wide, fd, k, c);
  }
  wide.resize(deg);
}

}  // namespace

CycloNum::CycloNum(int level)
    : level_(level),
      num_(static_cast<std::size_t>(detail::field_data(level).degree)) {}

CycloNum::CycloNum(int level, const Integer& value) : CycloNum(level) {
  num_[0] = value;
}

CycloNum CycloNum::rational(int level, const Rational& value) {
  CycloNum out(level);
  out.num_[0] = value.get_num();
  out.den_ = value.get_den();
  return out;
}

CycloNum CycloNum::from_coefficients(int level, const std::vector<Rational>& coeffs) {
  Integer den = 1;
  for (const auto& c : coeffs) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> num(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    num[k] = coeffs[k].get_num() * (den / coeffs[k].get_den());
  }
  return from_integer_poly(level, std::move(num), den);
}

CycloNum CycloNum::from_integer_poly(int level, std::vector<Integer> numerators,
                                     Integer denominator) {
  if (denominator == 0) throw InvalidParams("zero denominator");
  const auto& fd = detail::field_data(level);
  CycloNum out;
  out.level_ = level;
  reduce_wide(numerators, fd);
  out.num_ = std::move(numerators);
  out.den_ = std::move(denominator);
  out.normalize();
  return out;
}

void CycloNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& c : num_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  den_ /= g;
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

Rational CycloNum::coefficient(int k) const {
  Rational r(num_[static_cast<std::size_t>(k)], den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> CycloNum::coefficients() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (int k = 0; k < degree(); ++k) out.push_back(coefficient(k));
  return out;
}

bool CycloNum::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; });
}

bool CycloNum::is_one() const { return is_rational() && den_ == 1 && num_[0] == 1; }

bool CycloNum::is_rational() const {
  return std::all_of(num_.begin() + 1, num_.end(),
                     [](const Integer& c) { return c == 0; });
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.level_ != b.level_) {
    throw ModulusMismatch("comparing Q(zeta_" + std::to_string(a.level_) +
                          ") with Q(zeta_" + std::to_string(b.level_) + ")");
  }
  return a.den_ == b.den_ && a.num_ == b.num_;
}

CycloNum& CycloNum::operator+=(const CycloNum& other) {
  if (level_ != other.level_) throw ModulusMismatch("cyclotomic level mismatch");
  if (den_ == other.den_) {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] += other.num_[k];
  } else {
    for (std::size_t k = 0; k < num_.size(); ++k) {
      num_[k] *= other.den_;
      mpz_addmul(num_[k].get_mpz_t(), other.num_[k].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= other.den_;
  }
  normalize();
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& other) { return *this += -other; }

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

CycloNum& CycloNum::operator*=(const CycloNum& other) {
  if (level_ != other.level_) throw ModulusMismatch("cyclotomic level mismatch");
  const auto& fd = detail::field_data(level_);
  const std::size_t deg = num_.size();
  std::vector<Integer> wide(2 * deg - 1);
  for (std::size_t i = 0; i < deg; ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (other.num_[j] == 0) continue;
      mpz_addmul(wide[i + j].get_mpz_t(), num_[i].get_mpz_t(),
                 other.num_[j].get_mpz_t());
    }
  }
  reduce_wide(wide, fd);
  num_ = std::move(wide);
  den_ *= other.den_;
  normalize();
  return *this;
}

CycloNum& CycloNum::operator*=(const Rational& factor) {
  for (auto& c : num_) c *= factor.get_num();
  den_ *= factor.get_den();
  normalize();
  return *this;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw Singular("inverse of zero in Q(zeta_" + std::to_string(level_) + ")");
  if (is_rational()) {
    return rational(level_, Rational(den_, num_[0]));
  }
  const auto& fd = detail::field_data(level_);
  RatPoly r0(fd.modulus.begin(), fd.modulus.end());
  RatPoly r1;
  for (const auto& c : num_) r1.emplace_back(c);
  trim(r1);
  RatPoly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_N is irreducible.
  Rational g = r0[0];
  for (auto& c : s0) c /= g;
  CycloNum out = from_coefficients(level_, s0);
  out *= Rational(den_);
  return out;
}

CycloNum CycloNum::galois(std::int64_t u) const {
  const auto& fd = detail::field_data(level_);
  std::vector<Integer> acc(num_.size());
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    auto idx = static_cast<std::size_t>(
        ((static_cast<std::int64_t>(k) * u) % level_ + level_) % level_);
    add_power(acc, fd, idx, num_[k]);
  }
  return from_integer_poly(level_, std::move(acc), den_);
}

CycloNum CycloNum::lift(int new_level) const {
  if (new_level % level_ != 0) {
    throw ModulusMismatch("cannot lift level " + std::to_string(level_) +
                          " to " + std::to_string(new_level));
  }
  if (new_level == level_) return *this;
  const auto& fd = detail::field_data(new_level);
  const std::size_t step = static_cast<std::size_t>(new_level / level_);
  std::vector<Integer> acc(static_cast<std::size_t>(fd.degree));
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] != 0) add_power(acc, fd, k * step, num_[k]);
  }
  return from_integer_poly(new_level, std::move(acc), den_);
}

CycloNum CycloNum::pow(std::int64_t exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CycloNum result(level_, 1L);
  CycloNum base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::complex<long double> CycloNum::embed_long() const {
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  long double re = 0, im = 0;
  long den_exp = 0;
  double den_mant = mpz_get_d_2exp(&den_exp, den_.get_mpz_t());
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    long e = 0;
    double m = mpz_get_d_2exp(&e, num_[k].get_mpz_t());
    long double c = std::ldexp(static_cast<long double>(m) / den_mant,
                               static_cast<int>(e - den_exp));
    long double angle = two_pi * static_cast<long double>(k) / level_;
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {re, im};
}

std::complex<double> CycloNum::embed() const {
  auto z = embed_long();
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

std::string CycloNum::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < degree(); ++k) {
    Rational c = coefficient(k);
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

CycloNum zeta(int level, std::int64_t k) {
  const auto& fd = detail::field_data(level);
  const auto& row = fd.powers[static_cast<std::size_t>(((k % level) + level) % level)];
  std::vector<Integer> num(row.begin(), row.end());
  CycloNum out = CycloNum::from_integer_poly(level, std::move(num));
  return out;
}

}  // namespace weilrep
