#pragma once

#include <cstdint>
#include <vector>

#include "weilrep/det.hpp"
#include "weilrep/heisenberg.hpp"
#include "weilrep/matrix.hpp"
#include "weilrep/sl2.hpp"

namespace weilrep {

struct ElemFactor {
  enum class Kind { Upper, Lower };
  Kind kind;
  Residue value;

  static ElemFactor upper(const Residue& b) { return {Kind::Upper, b}; }
  static ElemFactor lower(const Residue& c) { return {Kind::Lower, c}; }
  Sl2Elem matrix() const;
  friend bool operator==(const ElemFactor&, const ElemFactor&) = default;
};

/// Unipotent factors, multiplied left to right.
using ElemWord = std::vector<ElemFactor>;

/// At most four factors. For unit c: Upper((a-1)/c) Lower(c) Upper((d-1)/c);
/// otherwise Lower(-t) followed by the word of Lower(t) g, where t = 1 mod
/// each prime dividing c and 0 mod the others. Adjacent factors of one kind
/// are merged and zero factors dropped.
ElemWord decompose(const Sl2Elem& g);
/// Lower(s) followed by decompose(Lower(-s) g); a second valid word for g.
ElemWord decompose_with_shift(const Sl2Elem& g, const Residue& s);
Sl2Elem word_product(const ElemWord& word, std::int64_t n);

/// F_n[psi_a]: entry (y, x) is zeta_n^(a y x). Throws NotAUnit.
template <class S>
const OpMatrix<S>& dft_matrix(std::int64_t n, std::int64_t a = 1);

/// C_n[psi_a], the solution of C^4 = n^2, C^n = det F_n[psi_a]. The float
/// backend solves through log|det| and its phase.
template <class S>
S proportionality_constant(std::int64_t n, std::int64_t a = 1);

/// diag(psi_a(-c x^2 / 2)).
template <class S>
OpMatrix<S> rho_lower(const Residue& c, std::int64_t a = 1);

/// C^-1 F, the operator of w = [[0, 1], [-1, 0]].
template <class S>
const OpMatrix<S>& rho_weyl(std::int64_t n, std::int64_t a = 1);
/// The conjugate transpose of rho_weyl; it is unitary.
template <class S>
const OpMatrix<S>& rho_weyl_inverse(std::int64_t n, std::int64_t a = 1);

/// rho_weyl rho_lower(-b) rho_weyl^-1, using w Upper(b) w^-1 = Lower(-b).
template <class S>
OpMatrix<S> rho_upper(const Residue& b, std::int64_t a = 1);

template <class S>
struct WeilOp {
  Sl2Elem g;
  OpMatrix<S> matrix;
};

template <class S>
OpMatrix<S> rho_word(const ElemWord& word, std::int64_t n, std::int64_t a = 1);

template <class S>
WeilOp<S> rho(const Sl2Elem& g, std::int64_t a = 1) {
  return {g, rho_word<S>(decompose(g), g.modulus(), a)};
}

/// The substitution operator f(x) -> f(u^-1 x) for a unit u.
template <class S>
OpMatrix<S> substitution_operator(const Residue& u);

/// A nonzero M with M pi(h) = pi(g h) M for h = (1,0,0), (0,1,0), scaled so its
/// first nonzero entry (row-major) is 1. Throws DegenerateSolutionSpace unless
/// the solution space is a line.
ExactMatrix intertwiner_solve(const Sl2Elem& g, std::int64_t a = 1);

/// (g + I)(g - I)^-1. Throws Singular when det(g - I) is not a unit.
Mat2 cayley(const Mat2& g);

template <class S>
struct CharacterValue {
  S computed;     // Tr rho(g)
  int predicted;  // (-det(g - I) / p)
};

/// Throws NotPrime, or Singular when g - I is not invertible.
template <class S>
CharacterValue<S> char_formula_check(const Sl2Elem& g);

/// Tr(M pi(h)) without forming the product.
template <class S>
S trace_with_pi(const OpMatrix<S>& m, const HeisPoint& h, std::int64_t a = 1);

/// Tr(rho(g) pi(h)).
template <class S>
S ch_tau(const Sl2Elem& g, const HeisPoint& h);

/// (-det(g - I)/p) psi(omega(kappa(g) v, v) / 4 + z). Throws Singular.
template <class S>
S ch_tau_closed_form(const Sl2Elem& g, const HeisPoint& h);

/// (1/p) sum over v' in V of ch_tau(g2)((v', 0)) ch_tau(g1)((v', 0)^-1 h); this
/// equals ch_tau(g1 g2)(h).
template <class S>
S ch_tau_convolution(const Sl2Elem& g1, const Sl2Elem& g2, const HeisPoint& h);

/// Column x has its 1 in row (x mod n1) n2 + (x mod n2). Throws NotCoprime.
template <class S>
OpMatrix<S> crt_perm_matrix(std::int64_t n1, std::int64_t n2);

/// P m P^T for the CRT permutation P, computed by reindexing.
template <class S>
OpMatrix<S> crt_conjugate(const OpMatrix<S>& m, std::int64_t n1, std::int64_t n2);

struct TensorDftResult {
  std::int64_t a;  // the character index n1 + n2 mod n1 n2
  bool pass;
};

/// kron(F_n1, F_n2) = P F_{n1 n2}[psi_{n1 + n2}] P^T, exactly.
TensorDftResult tensor_dft_check(std::int64_t n1, std::int64_t n2);

template <class S>
struct TensorWeilResult {
  S lambda;
  bool proportional;
  double abs_lambda;
};

/// lambda with P rho_{n1 n2}[psi_{n1 + n2}](g) P^T = lambda kron(rho_n1(g1), rho_n2(g2)).
/// `tol` applies to the float backend only.
template <class S>
TensorWeilResult<S> tensor_weil_check(std::int64_t n1, std::int64_t n2, const Sl2Elem& g,
                                      double tol = 0.0);

}  // namespace weilrep
