#pragma once

#include <cstdint>
#include <ostream>
#include <random>

#include "weilrep/matrix.hpp"
#include "weilrep/residue.hpp"
#include "weilrep/sl2.hpp"

namespace weilrep {

/// (t, w, z) in V x Z/nZ with V = (Z/nZ)^2.
struct HeisPoint {
  Residue t, w, z;

  HeisPoint(const Residue& t_, const Residue& w_, const Residue& z_);
  HeisPoint(std::int64_t t_, std::int64_t w_, std::int64_t z_, std::int64_t n)
      : HeisPoint(Residue(t_, n), Residue(w_, n), Residue(z_, n)) {}

  std::int64_t modulus() const { return t.modulus(); }
  friend bool operator==(const HeisPoint&, const HeisPoint&) = default;
};

std::ostream& operator<<(std::ostream& os, const HeisPoint& h);

/// omega((t, w), (t', w')) = t w' - w t'.
Residue symplectic(const Residue& t1, const Residue& w1, const Residue& t2, const Residue& w2);

/// (v, z)(v', z') = (v + v', z + z' + omega(v, v') / 2).
HeisPoint h_mul(const HeisPoint& h1, const HeisPoint& h2);
HeisPoint h_inv(const HeisPoint& h);
/// g acts on (t, w) as a column vector; z is fixed.
HeisPoint sl2_act(const Sl2Elem& g, const HeisPoint& h);

HeisPoint random_heis(std::int64_t n, std::mt19937_64& rng);

/// A matrix with one nonzero entry per row: row x holds coef[x] in column col[x].
template <class S>
struct MonomialMatrix {
  std::vector<std::size_t> col;
  std::vector<S> coef;

  OpMatrix<S> dense(int level) const;
};

/// pi(t, w, z) for the character psi_a(z) = zeta_n^(a z):
/// f(x) -> psi_a(w x + t w / 2 + z) f(x + t), so M[x][x + t] is the only
/// nonzero entry of row x.
template <class S>
MonomialMatrix<S> pi_monomial(const HeisPoint& h, std::int64_t a = 1);

template <class S>
OpMatrix<S> pi_matrix(const HeisPoint& h, std::int64_t a = 1) {
  return pi_monomial<S>(h, a).dense(static_cast<int>(h.modulus()));
}

/// Dimension of the space of matrices commuting with pi on the generators
/// (1,0,0), (0,1,0), (0,0,1), solved exactly.
std::int64_t commutant_dim(std::int64_t n);

}  // namespace weilrep
