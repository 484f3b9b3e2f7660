#include "weilrep/det.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "weilrep/residue.hpp"

namespace weilrep {

Complex LogDet::value() const {
  if (zero) return {0.0, 0.0};
  return std::exp(log_abs) * phase;
}

namespace {

std::size_t bit_size(const CycloNum& x) {
  std::size_t bits = mpz_sizeinbase(x.denominator().get_mpz_t(), 2);
  for (const auto& c : x.numerators()) bits += mpz_sizeinbase(c.get_mpz_t(), 2);
  return bits;
}

}  // namespace

CycloNum det_elimination(const ExactMatrix& m) {
  if (!m.is_square()) throw InvalidParams("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const int level = m.level();
  std::vector<std::vector<CycloNum>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(m(i, j));
  }
  CycloNum result(level, 1L);
  for (std::size_t k = 0; k < n; ++k) {
    // smallest nonzero pivot keeps coefficient growth down
    std::size_t pivot = n;
    std::size_t best_bits = 0;
    for (std::size_t r = k; r < n; ++r) {
      if (a[r][k].is_zero()) continue;
      std::size_t bits = bit_size(a[r][k]);
      if (pivot == n || bits < best_bits) {
        pivot = r;
        best_bits = bits;
      }
    }
    if (pivot == n) return CycloNum(level);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      result = -result;
    }
    result *= a[k][k];
    const CycloNum inv = a[k][k].inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const CycloNum factor = a[i][k] * inv;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!a[k][j].is_zero()) a[i][j] -= factor * a[k][j];
      }
    }
  }
  return result;
}

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m); }

u64 inv_mod_prime(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

// Solves A x = b in place mod a prime; A is square and nonsingular.
std::vector<u64> solve_mod(std::vector<u64> a, std::vector<u64> b, std::size_t n, u64 p) {
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && a[r * n + k] == 0) ++r;
    if (r == n) throw Singular("interpolation system is singular mod p");
    if (r != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[r * n + j], a[k * n + j]);
      std::swap(b[r], b[k]);
    }
    const u64 inv = inv_mod_prime(a[k * n + k], p);
    for (std::size_t j = k; j < n; ++j) a[k * n + j] = mulmod(a[k * n + j], inv, p);
    b[k] = mulmod(b[k], inv, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i * n + k] == 0) continue;
      const u64 f = a[i * n + k];
      for (std::size_t j = k; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] + p - mulmod(f, a[k * n + j], p)) % p;
      }
      b[i] = (b[i] + p - mulmod(f, b[k], p)) % p;
    }
  }
  return b;
}

u64 det_mod(std::vector<u64> a, std::size_t n, u64 p) {
  u64 det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && a[r * n + k] == 0) ++r;
    if (r == n) return 0;
    if (r != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[r * n + j], a[k * n + j]);
      det = (p - det) % p;
    }
    const u64 pivot = a[k * n + k];
    det = mulmod(det, pivot, p);
    const u64 inv = inv_mod_prime(pivot, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i * n + k] == 0) continue;
      const u64 f = mulmod(a[i * n + k], inv, p);
      for (std::size_t j = k; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] + p - mulmod(f, a[k * n + j], p)) % p;
      }
    }
  }
  return det;
}

// Units mod N in increasing order; the conjugates of zeta_N.
std::vector<std::int64_t> units_mod(int level) {
  std::vector<std::int64_t> out;
  for (std::int64_t u = 0; u < level; ++u) {
    if (std::gcd(u, static_cast<std::int64_t>(level)) == 1) out.push_back(u);
  }
  if (level == 1) out = {0};
  return out;
}

// log2 of the max row sum of the inverse complex Vandermonde on the conjugates.
double log2_inverse_vandermonde_norm(int level, std::size_t degree) {
  using C = std::complex<long double>;
  const auto units = units_mod(level);
  const std::size_t n = degree;
  std::vector<C> a(n * n), inv(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> *
                              static_cast<long double>(units[j]) / level;
    for (std::size_t t = 0; t < n; ++t) {
      a[j * n + t] = std::polar(1.0L, angle * static_cast<long double>(t));
    }
    inv[j * n + j] = 1.0L;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(a[r * n + k]) > std::abs(a[piv * n + k])) piv = r;
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a[piv * n + j], a[k * n + j]);
      std::swap(inv[piv * n + j], inv[k * n + j]);
    }
    const C p = a[k * n + k];
    for (std::size_t j = 0; j < n; ++j) {
      a[k * n + j] /= p;
      inv[k * n + j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const C f = a[i * n + k];
      if (f == C{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a[i * n + j] -= f * a[k * n + j];
        inv[i * n + j] -= f * inv[k * n + j];
      }
    }
  }
  long double worst = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    long double row = 0.0L;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(inv[i * n + j]);
    worst = std::max(worst, row);
  }
  return static_cast<double>(std::log2(std::max(worst, 1.0L)));
}

double log2_abs(const Integer& x) {
  if (x == 0) return -1e300;
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log2(std::abs(mant)) + static_cast<double>(exp);
}

}  // namespace

CycloNum det_multimodular(const ExactMatrix& m) {
  if (!m.is_square()) throw InvalidParams("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const int level = m.level();
  if (n == 0) return CycloNum(level, 1L);
  const auto& fd = detail::field_data(level);
  const auto deg = static_cast<std::size_t>(fd.degree);

  // clear denominators row by row and collect distinct entries
  Integer total_den = 1;
  std::map<std::vector<Integer>, std::size_t> ids;
  std::vector<std::vector<Integer>> distinct;
  std::vector<std::size_t> entry_id(n * n);
  double log2_hadamard = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_den = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(row_den.get_mpz_t(), row_den.get_mpz_t(), m(i, j).denominator().get_mpz_t());
    }
    total_den *= row_den;
    long double row_norm2 = 0.0L;
    for (std::size_t j = 0; j < n; ++j) {
      const CycloNum& x = m(i, j);
      std::vector<Integer> poly(deg);
      Integer scale = row_den / x.denominator();
      long double abs_sum = 0.0L;
      for (std::size_t t = 0; t < deg; ++t) {
        poly[t] = x.numerators()[t] * scale;
        if (poly[t] != 0) abs_sum += std::exp2(static_cast<long double>(log2_abs(poly[t])));
      }
      row_norm2 += abs_sum * abs_sum;
      auto [it, inserted] = ids.emplace(poly, distinct.size());
      if (inserted) distinct.push_back(std::move(poly));
      entry_id[i * n + j] = it->second;
    }
    if (row_norm2 == 0.0L) return CycloNum(level);
    log2_hadamard += 0.5 * static_cast<double>(std::log2(row_norm2));
  }
  const double target_bits =
      log2_hadamard + log2_inverse_vandermonde_norm(level, deg) + 8.0;

  const auto units = units_mod(level);
  const auto level_primes = prime_divisors(level);
  const u64 step = static_cast<u64>(level);
  u64 k = ((u64{1} << 31) - 2) / step;

  std::vector<Integer> residue(deg, 0);
  Integer modulus = 1;
  std::vector<u64> values(deg), vander(deg * deg), mat(n * n), evals(distinct.size());
  while (log2_abs(modulus) < target_bits + 1.0) {
    u64 ell = 0;
    while (k > 0) {
      const u64 cand = k * step + 1;
      --k;
      if (cand > 2 && is_prime(static_cast<std::int64_t>(cand))) {
        ell = cand;
        break;
      }
    }
    if (ell == 0) throw TooLarge("ran out of split primes for determinant");

    // an element of exact order N
    u64 root = 1;
    for (u64 g = 2; level > 1; ++g) {
      const u64 y = pow_mod(g, (ell - 1) / step, ell);
      bool ok = true;
      for (auto q : level_primes) {
        if (pow_mod(y, step / static_cast<u64>(q), ell) == 1) ok = false;
      }
      if (ok) {
        root = y;
        break;
      }
    }

    for (std::size_t j = 0; j < deg; ++j) {
      const u64 r = pow_mod(root, static_cast<u64>(units[j]), ell);
      u64 power = 1;
      for (std::size_t t = 0; t < deg; ++t) {
        vander[j * deg + t] = power;
        power = mulmod(power, r, ell);
      }
      for (std::size_t e = 0; e < distinct.size(); ++e) {
        u64 acc = 0;
        for (std::size_t t = deg; t-- > 0;) {
          const u64 c = mpz_fdiv_ui(distinct[e][t].get_mpz_t(), ell);
          acc = (mulmod(acc, r, ell) + c) % ell;
        }
        evals[e] = acc;
      }
      for (std::size_t q = 0; q < n * n; ++q) mat[q] = evals[entry_id[q]];
      values[j] = det_mod(mat, n, ell);
    }
    const auto coeffs = solve_mod(vander, values, deg, ell);

    // Garner step: x = r + M * ((c - r) * M^-1 mod ell)
    const u64 m_mod = mpz_fdiv_ui(modulus.get_mpz_t(), ell);
    const u64 m_inv = inv_mod_prime(m_mod, ell);
    for (std::size_t t = 0; t < deg; ++t) {
      const u64 r_mod = mpz_fdiv_ui(residue[t].get_mpz_t(), ell);
      const u64 delta = mulmod((coeffs[t] + ell - r_mod) % ell, m_inv, ell);
      residue[t] += modulus * Integer(static_cast<unsigned long>(delta));
    }
    modulus *= Integer(static_cast<unsigned long>(ell));
  }

  const Integer half = modulus / 2;
  for (auto& c : residue) {
    if (c > half) c -= modulus;
  }
  return CycloNum::from_integer_poly(level, residue, total_den);
}

CycloNum det_exact(const ExactMatrix& m) {
  if (!m.is_square()) throw InvalidParams("determinant of a non-square matrix");
  if (m.rows() <= 12) return det_elimination(m);
  return det_multimodular(m);
}

LogDet log_det(const FloatMatrix& m) {
  if (!m.is_square()) throw InvalidParams("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Complex> a = m.data();
  LogDet out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(a[k * n + k]);
    for (std::size_t r = k + 1; r < n; ++r) {
      double v = std::abs(a[r * n + k]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) {
      out.zero = true;
      return out;
    }
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[k * n + j]);
      out.phase = -out.phase;
    }
    const Complex p = a[k * n + k];
    out.log_abs += std::log(best);
    out.phase *= p / best;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = a[i * n + k] / p;
      if (f == Complex{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return out;
}

Complex det_float(const FloatMatrix& m) { return log_det(m).value(); }

CycloNum vandermonde_det_product(std::int64_t n) {
  if (n < 1 || n % 2 == 0) throw InvalidParams("vandermonde_det_product expects odd n >= 1");
  const int level = static_cast<int>(n);
  std::vector<CycloNum> z;
  for (std::int64_t x = 0; x < n; ++x) z.push_back(zeta(level, x));
  CycloNum result(level, 1L);
  for (std::int64_t y = 1; y < n; ++y) {
    for (std::int64_t x = 0; x < y; ++x) result *= z[y] - z[x];
  }
  return result;
}

Complex vandermonde_det_product_float(std::int64_t n) {
  using T = ScalarTraits<Complex>;
  Complex result{1.0, 0.0};
  for (std::int64_t y = 1; y < n; ++y) {
    for (std::int64_t x = 0; x < y; ++x) {
      result *= T::root(static_cast<int>(n), y) - T::root(static_cast<int>(n), x);
    }
  }
  return result;
}

BezoutPair proportionality_bezout(std::int64_t n) {
  if (n < 1 || n % 2 == 0) throw InvalidParams("n must be odd");
  // v = n^-1 mod 4, so 1 - n v is divisible by 4
  std::int64_t v = (n % 4 == 1) ? 1 : 3;
  return {(1 - n * v) / 4, v};
}

CycloNum solve_proportionality_constant(std::int64_t n, const CycloNum& det_value) {
  if (det_value.is_zero()) throw NoSolution("determinant is zero");
  const auto [u, v] = proportionality_bezout(n);
  const int level = det_value.level();
  // u <= 0, so (n^2)^u is 1 / n^(-2u)
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(-2 * u));
  CycloNum c = det_value.pow(v) * Rational(Integer(1), scale);
  if (c.pow(4) != CycloNum(level, static_cast<long>(n * n))) {
    throw NoSolution("candidate fails C^4 = n^2");
  }
  if (c.pow(n) != det_value) throw NoSolution("candidate fails C^n = det");
  return c;
}

Complex solve_proportionality_constant(std::int64_t n, const LogDet& det_value,
                                       double rel_tol) {
  if (det_value.zero) throw NoSolution("determinant is zero");
  const auto [u, v] = proportionality_bezout(n);
  const double log_n = std::log(static_cast<double>(n));
  const double log_abs = static_cast<double>(v) * det_value.log_abs + 2.0 * static_cast<double>(u) * log_n;
  Complex phase{1.0, 0.0};
  for (std::int64_t k = 0; k < v; ++k) phase *= det_value.phase;
  const Complex c = std::exp(log_abs) * phase;

  const double n2 = static_cast<double>(n * n);
  if (std::abs(std::pow(c, 4) - n2) > rel_tol * n2 * 16) {
    throw NoSolution("candidate fails C^4 = n^2");
  }
  Complex phase_n{1.0, 0.0};
  for (std::int64_t k = 0; k < n; ++k) phase_n *= phase;
  const double scale = std::max(1.0, std::abs(det_value.log_abs));
  if (std::abs(static_cast<double>(n) * log_abs - det_value.log_abs) > rel_tol * scale * 16 ||
      std::abs(phase_n - det_value.phase) > rel_tol * static_cast<double>(n) * 16) {
    throw NoSolution("candidate fails C^n = det");
  }
  return c;
}

}  // namespace weilrep
