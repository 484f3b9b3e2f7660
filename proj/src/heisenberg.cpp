#include "weilrep/heisenberg.hpp"

#include "binomial_system.hpp"
#include "weilrep/errors.hpp"

namespace weilrep {

HeisPoint::HeisPoint(const Residue& t_, const Residue& w_, const Residue& z_)
    : t(t_), w(w_), z(z_) {
  if (t.modulus() != w.modulus() || t.modulus() != z.modulus()) {
    throw ModulusMismatch("Heisenberg coordinates with different moduli");
  }
}

std::ostream& operator<<(std::ostream& os, const HeisPoint& h) {
  return os << "(" << h.t.value() << "," << h.w.value() << "," << h.z.value() << ") mod "
            << h.modulus();
}

Residue symplectic(const Residue& t1, const Residue& w1, const Residue& t2, const Residue& w2) {
  return t1 * w2 - w1 * t2;
}

HeisPoint h_mul(const HeisPoint& h1, const HeisPoint& h2) {
  if (h1.modulus() != h2.modulus()) throw ModulusMismatch("Heisenberg product across moduli");
  const Residue half = inv(Residue(2, h1.modulus()));
  return {h1.t + h2.t, h1.w + h2.w, h1.z + h2.z + half * symplectic(h1.t, h1.w, h2.t, h2.w)};
}

HeisPoint h_inv(const HeisPoint& h) { return {-h.t, -h.w, -h.z}; }

HeisPoint sl2_act(const Sl2Elem& g, const HeisPoint& h) {
  if (g.modulus() != h.modulus()) throw ModulusMismatch("SL2 action across moduli");
  auto [t, w] = g.matrix().apply(h.t, h.w);
  return {t, w, h.z};
}

HeisPoint random_heis(std::int64_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(0, n - 1);
  const auto t = dist(rng), w = dist(rng), z = dist(rng);
  return HeisPoint(t, w, z, n);
}

template <class S>
OpMatrix<S> MonomialMatrix<S>::dense(int level) const {
  OpMatrix<S> m(col.size(), col.size(), level);
  for (std::size_t x = 0; x < col.size(); ++x) m(x, col[x]) = coef[x];
  return m;
}

template <class S>
MonomialMatrix<S> pi_monomial(const HeisPoint& h, std::int64_t a) {
  const std::int64_t n = h.modulus();
  const int level = static_cast<int>(n);
  const Residue half = inv(Residue(2, n));
  const Residue scale(a, n);
  const Residue base = half * h.t * h.w + h.z;
  MonomialMatrix<S> m;
  m.col.resize(static_cast<std::size_t>(n));
  m.coef.reserve(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < n; ++x) {
    m.col[static_cast<std::size_t>(x)] = static_cast<std::size_t>(mod_floor(x + h.t.value(), n));
    const Residue phase = scale * (h.w * x + base);
    m.coef.push_back(ScalarTraits<S>::root(level, phase.value()));
  }
  return m;
}

template struct MonomialMatrix<CycloNum>;
template struct MonomialMatrix<Complex>;
template MonomialMatrix<CycloNum> pi_monomial<CycloNum>(const HeisPoint&, std::int64_t);
template MonomialMatrix<Complex> pi_monomial<Complex>(const HeisPoint&, std::int64_t);

std::int64_t commutant_dim(std::int64_t n) {
  if (n < 1 || n % 2 == 0) throw InvalidParams("commutant_dim expects odd n");
  const int level = static_cast<int>(n);
  const auto un = static_cast<std::size_t>(n);
  detail::BinomialSystem sys(un * un, level);
  for (const HeisPoint& h : {HeisPoint(1, 0, 0, n), HeisPoint(0, 1, 0, n), HeisPoint(0, 0, 1, n)}) {
    const auto p = pi_monomial<CycloNum>(h);
    detail::add_intertwining(sys, p, p);
  }
  return static_cast<std::int64_t>(sys.dimension());
}

}  // namespace weilrep
