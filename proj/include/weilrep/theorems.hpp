#pragma once

#include <cstdint>
#include <optional>

#include "weilrep/scalar.hpp"
#include "weilrep/weil.hpp"

namespace weilrep {

/// G_n(a) = sum_x zeta_n^(a x^2). Throws NotAUnit.
template <class S>
S gauss_sum(std::int64_t n, std::int64_t a = 1);

/// sqrt(n) for n = 1 mod 4, i sqrt(n) for n = 3 mod 4.
Complex gauss_sum_closed_form(std::int64_t n);

/// i^((n-1)/2) sqrt(n).
Complex proportionality_closed_form(std::int64_t n);

/// i^(n(n-1)/2) n^(n/2).
Complex dft_det_closed_form(std::int64_t n);

struct ExactCheck {
  CycloNum lhs;
  CycloNum rhs;
  bool pass;
};

/// G_n = Tr F_n.
ExactCheck gauss_trace_identity(std::int64_t n);

struct TechLemmaReport {
  ExactCheck twist;      // sum psi(a x^2) = (a/p) sum psi(x^2)
  ExactCheck character;  // sum psi(a x^2) = sum psi(a x) (x/p)
  bool pass;
};
TechLemmaReport tech_lemma_check(std::int64_t p, std::int64_t a);

/// G_pq (p/q)(q/p) = G_p G_q in Q(zeta_pq).
ExactCheck ident_lemma_check(std::int64_t p, std::int64_t q);

struct QrOptions {
  Backend trace_backend = Backend::Exact;
  /// The trace route runs exactly up to this pq and on floats beyond it.
  std::int64_t exact_limit = 105;
  double float_tol = 1e-6;
};

struct QrVerdict {
  std::int64_t p = 0;
  std::int64_t q = 0;
  int lhs_direct = 0;
  int lhs_gauss_ratio = 0;
  int lhs_trace_route = 0;
  int rhs_parity = 0;
  Backend trace_backend = Backend::Exact;
  /// |C_p C_q Tr_p Tr_q - e C_pq Tr_pq| / |C_pq Tr_pq|, float route only.
  std::optional<double> residual;
  bool pass = false;
};

/// (p/q)(q/p) by Legendre symbols, by the Gauss-sum ratio, by the traces of
/// constructed operators, and by parity.
QrVerdict qr_verify(std::int64_t p, std::int64_t q, const QrOptions& options = {});

struct JacobiReciprocityReport {
  int symbols = 0;  // (n1/n2)(n2/n1)
  int parity = 0;
  ExactCheck gauss;  // G_n1 G_n2 = (n1/n2)(n2/n1) G_{n1 n2}
  bool pass = false;
};
JacobiReciprocityReport jacobi_reciprocity_check(std::int64_t n1, std::int64_t n2);

/// The sign e with G_n(a) = e G_n(1). Throws NoSolution if neither sign fits.
int jacobi_via_gauss(std::int64_t n, std::int64_t a);

/// C_n[psi_a] = (a/n) C_n[psi_1] via determinants.
ExactCheck equivariance_check(std::int64_t n, std::int64_t a);

struct GaussSignReport {
  int symbol = 0;  // (-2/p)
  ExactCheck trace;     // Tr rho_p(w) = (-2/p)
  ExactCheck constant;  // G_p = C_p (-2/p)
  double residual = 0;  // |G_p - sqrt(p) or i sqrt(p)|
  bool float_pass = false;
  bool pass = false;
};
GaussSignReport gauss_sign_check(std::int64_t p, double tol = 1e-9);

/// Tr rho_pq(w) = Tr rho_p(w) Tr rho_q(w).
ExactCheck trace_prop_check(std::int64_t p, std::int64_t q);

}  // namespace weilrep
