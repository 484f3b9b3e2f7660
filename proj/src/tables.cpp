#include "weilrep/tables.hpp"

#include <gmpxx.h>

#include <cmath>
#include <sstream>

#include "weilrep/det.hpp"
#include "weilrep/errors.hpp"
#include "weilrep/residue.hpp"
#include "weilrep/theorems.hpp"
#include "weilrep/weil.hpp"

namespace weilrep {

std::string sqrt_power_label(int i_power, std::int64_t n, std::int64_t half_exponent) {
  const int k = ((i_power % 4) + 4) % 4;
  mpz_class coeff;
  mpz_ui_pow_ui(coeff.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(half_exponent / 2));
  const bool has_root = half_exponent % 2 != 0 && n != 1;
  std::string magnitude;
  if (!has_root) {
    magnitude = coeff.get_str();
  } else if (coeff == 1) {
    magnitude = "sqrt(" + std::to_string(n) + ")";
  } else {
    magnitude = coeff.get_str() + "*sqrt(" + std::to_string(n) + ")";
  }
  const std::string sign = k >= 2 ? "-" : "";
  if (k % 2 == 0) return sign + magnitude;
  if (magnitude == "1") return sign + "i";
  if (coeff == 1) return sign + "i*" + magnitude;
  return sign + magnitude + "*i";
}

namespace {

// power k of i with z closest to i^k * n^(m/2)
int nearest_i_power(Complex z, std::int64_t n, std::int64_t half_exponent) {
  const double mag = std::pow(static_cast<double>(n), half_exponent / 2.0);
  const Complex units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  int best = 0;
  for (int k = 1; k < 4; ++k) {
    if (std::abs(z - units[k] * mag) < std::abs(z - units[best] * mag)) best = k;
  }
  return best;
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(15);
  os << (std::abs(x) < 1e-12 ? 0.0 : x);
  return os.str();
}

std::string pm(int s) { return s > 0 ? "+1" : "-1"; }

std::string reciprocity(std::int64_t bound) {
  std::ostringstream os;
  os << "p,q,legendre_p_q,legendre_q_p,product,parity_sign,agree\n";
  const auto primes = odd_primes_up_to(bound);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const std::int64_t p = primes[i], q = primes[j];
      const int a = legendre(p, q), b = legendre(q, p);
      const int parity = ((p - 1) / 2 * ((q - 1) / 2)) % 2 == 0 ? 1 : -1;
      os << p << "," << q << "," << pm(a) << "," << pm(b) << "," << pm(a * b) << "," << pm(parity) << ","
         << (a * b == parity ? "true" : "false") << "\n";
    }
  }
  return os.str();
}

std::string gauss_signs(std::int64_t bound) {
  std::ostringstream os;
  os << "p,gauss_sum,re,im,residual\n";
  for (auto p : odd_primes_up_to(bound)) {
    const Complex g = gauss_sum<CycloNum>(p).embed();
    const int k = nearest_i_power(g, p, 1);
    const Complex units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const double residual = std::abs(g - units[k] * std::sqrt(static_cast<double>(p)));
    os << p << "," << sqrt_power_label(k, p, 1) << "," << num(g.real()) << "," << num(g.imag()) << ","
       << residual << "\n";
  }
  return os.str();
}

std::string constants(std::int64_t bound) {
  std::ostringstream os;
  os << "n,C_n,C_n_exact,C_n_re,C_n_im,det_F_n,det_F_n_re,det_F_n_im\n";
  for (std::int64_t n = 3; n <= bound; n += 2) {
    const CycloNum c = proportionality_constant<CycloNum>(n);
    const Complex ce = c.embed();
    const Complex d = det_exact(dft_matrix<CycloNum>(n)).embed();
    os << n << "," << sqrt_power_label(nearest_i_power(ce, n, 1), n, 1) << ",\"" << c.to_string() << "\","
       << num(ce.real()) << "," << num(ce.imag()) << "," << sqrt_power_label(nearest_i_power(d, n, n), n, n) << ","
       << num(d.real()) << "," << num(d.imag()) << "\n";
  }
  return os.str();
}

}  // namespace

std::string emit_table(const std::string& kind, std::int64_t bound) {
  if (kind == "reciprocity") return reciprocity(bound);
  if (kind == "gauss-signs") return gauss_signs(bound);
  if (kind == "constants") return constants(bound);
  throw InvalidParams("unknown table kind '" + kind + "'");
}

}  // namespace weilrep
