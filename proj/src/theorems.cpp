#include "weilrep/theorems.hpp"

#include <cmath>
#include <numeric>

#include "weilrep/errors.hpp"

namespace weilrep {

namespace {

void require_odd_prime(std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw NotPrime(std::to_string(p) + " is not an odd prime");
}

void require_coprime_odd(std::int64_t n1, std::int64_t n2) {
  if (n1 < 1 || n2 < 1 || n1 % 2 == 0 || n2 % 2 == 0) throw InvalidParams("moduli must be odd");
  if (std::gcd(n1, n2) != 1) throw NotCoprime("moduli must be coprime");
}

int parity_sign(std::int64_t n1, std::int64_t n2) {
  return (((n1 - 1) / 2) * ((n2 - 1) / 2)) % 2 == 0 ? 1 : -1;
}

CycloNum lifted_gauss(std::int64_t n, std::int64_t level) {
  return gauss_sum<CycloNum>(n).lift(static_cast<int>(level));
}

ExactCheck make_check(CycloNum lhs, CycloNum rhs) {
  const bool pass = lhs == rhs;
  return {std::move(lhs), std::move(rhs), pass};
}

// e in {1, -1} with lhs = e rhs, or 0.
int sign_relation(const CycloNum& lhs, const CycloNum& rhs) {
  if (lhs == rhs) return 1;
  if (lhs == -rhs) return -1;
  return 0;
}

}  // namespace

template <class S>
S gauss_sum(std::int64_t n, std::int64_t a) {
  if (n < 1 || n % 2 == 0) throw InvalidParams("n must be odd");
  const Residue r(a, n);
  if (!r.is_unit()) throw NotAUnit("Gauss sum character index");
  const int level = static_cast<int>(n);
  S acc = ScalarTraits<S>::zero(level);
  for (std::int64_t x = 0; x < n; ++x) acc += ScalarTraits<S>::root(level, (r * (x * x % n)).value());
  return acc;
}

template CycloNum gauss_sum<CycloNum>(std::int64_t, std::int64_t);
template Complex gauss_sum<Complex>(std::int64_t, std::int64_t);

Complex gauss_sum_closed_form(std::int64_t n) {
  const double root = std::sqrt(static_cast<double>(n));
  return n % 4 == 1 ? Complex(root, 0.0) : Complex(0.0, root);
}

Complex proportionality_closed_form(std::int64_t n) {
  const Complex ik[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return ik[((n - 1) / 2) % 4] * std::sqrt(static_cast<double>(n));
}

Complex dft_det_closed_form(std::int64_t n) {
  const Complex ik[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const long double mag = std::pow(static_cast<long double>(n), static_cast<long double>(n) / 2.0L);
  return ik[(n * (n - 1) / 2) % 4] * static_cast<double>(mag);
}

ExactCheck gauss_trace_identity(std::int64_t n) {
  return make_check(gauss_sum<CycloNum>(n), dft_matrix<CycloNum>(n).trace());
}

TechLemmaReport tech_lemma_check(std::int64_t p, std::int64_t a) {
  require_odd_prime(p);
  const int level = static_cast<int>(p);
  const CycloNum twisted = gauss_sum<CycloNum>(p, a);
  ExactCheck twist = make_check(twisted, gauss_sum<CycloNum>(p) * CycloNum(level, static_cast<long>(legendre(a, p))));
  CycloNum character_sum(level);
  for (std::int64_t x = 1; x < p; ++x) {
    character_sum += zeta(level, mod_floor(a * x, p)) * CycloNum(level, static_cast<long>(legendre(x, p)));
  }
  ExactCheck character = make_check(twisted, character_sum);
  const bool pass = twist.pass && character.pass;
  return {std::move(twist), std::move(character), pass};
}

ExactCheck ident_lemma_check(std::int64_t p, std::int64_t q) {
  require_odd_prime(p);
  require_odd_prime(q);
  if (p == q) throw InvalidParams("primes must be distinct");
  const std::int64_t n = p * q;
  const int level = static_cast<int>(n);
  const long symbols = legendre(p, q) * legendre(q, p);
  return make_check(gauss_sum<CycloNum>(n) * CycloNum(level, symbols),
                    lifted_gauss(p, n) * lifted_gauss(q, n));
}

QrVerdict qr_verify(std::int64_t p, std::int64_t q, const QrOptions& options) {
  require_odd_prime(p);
  require_odd_prime(q);
  if (p == q) throw InvalidParams("primes must be distinct");
  const std::int64_t n = p * q;
  const int level = static_cast<int>(n);
  QrVerdict v;
  v.p = p;
  v.q = q;
  v.lhs_direct = legendre(p, q) * legendre(q, p);
  v.rhs_parity = parity_sign(p, q);

  v.lhs_gauss_ratio = sign_relation(lifted_gauss(p, n) * lifted_gauss(q, n), gauss_sum<CycloNum>(n));
  if (v.lhs_gauss_ratio == 0) throw NoSolution("G_p G_q is not +-G_pq");

  const bool exact = options.trace_backend == Backend::Exact && n <= options.exact_limit;
  v.trace_backend = exact ? Backend::Exact : Backend::Float;
  if (exact) {
    auto part = [&](std::int64_t m) {
      return (proportionality_constant<CycloNum>(m) * rho_weyl<CycloNum>(m).trace()).lift(level);
    };
    v.lhs_trace_route = sign_relation(part(p) * part(q), part(n));
  } else {
    auto part = [](std::int64_t m) {
      return proportionality_constant<Complex>(m) * rho_weyl<Complex>(m).trace();
    };
    const Complex lhs = part(p) * part(q);
    const Complex rhs = part(n);
    const int e = std::real(lhs / rhs) >= 0 ? 1 : -1;
    const double residual = std::abs(lhs - static_cast<double>(e) * rhs) / std::abs(rhs);
    v.residual = residual;
    v.lhs_trace_route = residual <= options.float_tol ? e : 0;
  }
  v.pass = v.lhs_direct == v.rhs_parity && v.lhs_gauss_ratio == v.rhs_parity &&
           v.lhs_trace_route == v.rhs_parity;
  return v;
}

JacobiReciprocityReport jacobi_reciprocity_check(std::int64_t n1, std::int64_t n2) {
  require_coprime_odd(n1, n2);
  JacobiReciprocityReport r;
  r.symbols = jacobi(n1 % n2, n2) * jacobi(n2 % n1, n1);
  r.parity = parity_sign(n1, n2);
  const std::int64_t n = n1 * n2;
  const int level = static_cast<int>(n);
  r.gauss = make_check(lifted_gauss(n1, n) * lifted_gauss(n2, n),
                       gauss_sum<CycloNum>(n) * CycloNum(level, static_cast<long>(r.symbols)));
  r.pass = r.symbols == r.parity && r.gauss.pass;
  return r;
}

int jacobi_via_gauss(std::int64_t n, std::int64_t a) {
  const int e = sign_relation(gauss_sum<CycloNum>(n, a), gauss_sum<CycloNum>(n));
  if (e == 0) throw NoSolution("G_n(a) is not +-G_n(1)");
  return e;
}

ExactCheck equivariance_check(std::int64_t n, std::int64_t a) {
  const int level = static_cast<int>(n);
  return make_check(proportionality_constant<CycloNum>(n, a),
                    proportionality_constant<CycloNum>(n) * CycloNum(level, static_cast<long>(jacobi(a, n))));
}

GaussSignReport gauss_sign_check(std::int64_t p, double tol) {
  require_odd_prime(p);
  const int level = static_cast<int>(p);
  GaussSignReport r;
  r.symbol = legendre(-2, p);
  const CycloNum symbol(level, static_cast<long>(r.symbol));
  r.trace = make_check(rho_weyl<CycloNum>(p).trace(), symbol);
  const CycloNum g = gauss_sum<CycloNum>(p);
  r.constant = make_check(g, proportionality_constant<CycloNum>(p) * symbol);
  r.residual = std::abs(g.embed() - gauss_sum_closed_form(p));
  r.float_pass = r.residual <= tol;
  r.pass = r.trace.pass && r.constant.pass && r.float_pass;
  return r;
}

ExactCheck trace_prop_check(std::int64_t p, std::int64_t q) {
  require_odd_prime(p);
  require_odd_prime(q);
  if (p == q) throw InvalidParams("primes must be distinct");
  const std::int64_t n = p * q;
  const int level = static_cast<int>(n);
  return make_check(rho_weyl<CycloNum>(n).trace(),
                    rho_weyl<CycloNum>(p).trace().lift(level) * rho_weyl<CycloNum>(q).trace().lift(level));
}

}  // namespace weilrep
