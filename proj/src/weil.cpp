#include "weilrep/weil.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "binomial_system.hpp"
#include "weilrep/errors.hpp"

namespace weilrep {

Sl2Elem ElemFactor::matrix() const {
  return kind == Kind::Upper ? Sl2Elem::upper(value) : Sl2Elem::lower(value);
}

namespace {

ElemWord simplify(const ElemWord& word) {
  ElemWord out;
  for (const auto& f : word) {
    if (f.value.is_zero()) continue;
    if (!out.empty() && out.back().kind == f.kind) {
      out.back().value += f.value;
      if (out.back().value.is_zero()) out.pop_back();
    } else {
      out.push_back(f);
    }
  }
  return out;
}

ElemWord decompose_unit_c(const Sl2Elem& g) {
  const Residue ci = inv(g.c());
  return {ElemFactor::upper((g.a() - 1) * ci), ElemFactor::lower(g.c()),
          ElemFactor::upper((g.d() - 1) * ci)};
}

}  // namespace

ElemWord decompose(const Sl2Elem& g) {
  const std::int64_t n = g.modulus();
  if (g == Sl2Elem::identity(n)) return {};
  if (g.c().is_unit()) return simplify(decompose_unit_c(g));
  // c + t a is a unit: mod p | c, a is a unit since det g = 1
  std::vector<Residue> parts;
  for (auto [p, k] : factorize(n)) {
    std::int64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    parts.emplace_back(g.c().value() % p == 0 ? 1 : 0, pk);
  }
  const Residue t = crt_solve(parts);
  ElemWord word{ElemFactor::lower(-t)};
  for (const auto& f : decompose_unit_c(Sl2Elem::lower(t) * g)) word.push_back(f);
  return simplify(word);
}

ElemWord decompose_with_shift(const Sl2Elem& g, const Residue& s) {
  ElemWord word{ElemFactor::lower(s)};
  for (const auto& f : decompose(Sl2Elem::lower(-s) * g)) word.push_back(f);
  return simplify(word);
}

Sl2Elem word_product(const ElemWord& word, std::int64_t n) {
  Sl2Elem out = Sl2Elem::identity(n);
  for (const auto& f : word) out = out * f.matrix();
  return out;
}

namespace {

using Key = std::pair<std::int64_t, std::int64_t>;
using UpperKey = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

// rho_upper is only memoized up to this modulus; larger matrices are rebuilt
constexpr std::int64_t kUpperCacheLimit = 45;

template <class S>
struct Cache {
  std::shared_mutex mutex;
  std::map<Key, std::unique_ptr<OpMatrix<S>>> dft, weyl, weyl_inv;
  std::map<Key, std::unique_ptr<S>> constant;
  std::map<UpperKey, std::unique_ptr<OpMatrix<S>>> upper;
};

template <class S>
Cache<S>& cache() {
  static Cache<S> instance;
  return instance;
}

// Computes outside the lock, so a builder may recurse into other entries.
template <class Map, class K, class Make>
const typename Map::mapped_type::element_type& memo(std::shared_mutex& mutex, Map& map,
                                                     const K& key, Make make) {
  {
    std::shared_lock lock(mutex);
    auto it = map.find(key);
    if (it != map.end()) return *it->second;
  }
  using Value = typename Map::mapped_type::element_type;
  auto value = std::make_unique<Value>(make());
  std::unique_lock lock(mutex);
  auto [it, inserted] = map.emplace(key, std::move(value));
  return *it->second;
}

Key character_key(std::int64_t n, std::int64_t a) {
  if (n < 1 || n % 2 == 0) throw InvalidParams("modulus must be odd and >= 1");
  const Residue r(a, n);
  if (!r.is_unit()) throw NotAUnit("character index " + std::to_string(a) + " mod " + std::to_string(n));
  return {n, r.value()};
}

template <class S>
S solve_constant(std::int64_t n, const OpMatrix<S>& f);

template <>
CycloNum solve_constant<CycloNum>(std::int64_t n, const ExactMatrix& f) {
  return solve_proportionality_constant(n, det_exact(f));
}

template <>
Complex solve_constant<Complex>(std::int64_t n, const FloatMatrix& f) {
  return solve_proportionality_constant(n, log_det(f));
}

ExactMatrix relevel(const ExactMatrix& m, int level) { return lift(m, level); }

FloatMatrix relevel(const FloatMatrix& m, int level) {
  FloatMatrix out(m.rows(), m.cols(), level);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

void require_prime(std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw NotPrime(std::to_string(p) + " is not an odd prime");
}

}  // namespace

template <class S>
const OpMatrix<S>& dft_matrix(std::int64_t n, std::int64_t a) {
  const Key key = character_key(n, a);
  auto& c = cache<S>();
  return memo(c.mutex, c.dft, key, [&] {
    const int level = static_cast<int>(n);
    OpMatrix<S> m(n, n, level);
    for (std::int64_t y = 0; y < n; ++y) {
      for (std::int64_t x = 0; x < n; ++x) {
        m(y, x) = ScalarTraits<S>::root(level, key.second * (x * y % n) % n);
      }
    }
    return m;
  });
}

template <class S>
S proportionality_constant(std::int64_t n, std::int64_t a) {
  const Key key = character_key(n, a);
  auto& c = cache<S>();
  return memo(c.mutex, c.constant, key, [&] { return solve_constant<S>(n, dft_matrix<S>(n, key.second)); });
}

template <class S>
OpMatrix<S> rho_lower(const Residue& c, std::int64_t a) {
  const std::int64_t n = c.modulus();
  const Key key = character_key(n, a);
  const int level = static_cast<int>(n);
  const Residue coeff = -(inv(Residue(2, n)) * c) * key.second;
  std::vector<S> diag;
  diag.reserve(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < n; ++x) {
    diag.push_back(ScalarTraits<S>::root(level, (coeff * Residue(x * x, n)).value()));
  }
  return OpMatrix<S>::diagonal(diag, level);
}

template <class S>
const OpMatrix<S>& rho_weyl(std::int64_t n, std::int64_t a) {
  const Key key = character_key(n, a);
  auto& c = cache<S>();
  return memo(c.mutex, c.weyl, key, [&] {
    OpMatrix<S> m = dft_matrix<S>(n, key.second);
    m *= ScalarTraits<S>::inverse(proportionality_constant<S>(n, key.second));
    return m;
  });
}

template <class S>
const OpMatrix<S>& rho_weyl_inverse(std::int64_t n, std::int64_t a) {
  const Key key = character_key(n, a);
  auto& c = cache<S>();
  return memo(c.mutex, c.weyl_inv, key, [&] { return rho_weyl<S>(n, key.second).conj_transpose(); });
}

template <class S>
OpMatrix<S> rho_upper(const Residue& b, std::int64_t a) {
  const std::int64_t n = b.modulus();
  const Key key = character_key(n, a);
  auto build = [&] {
    return rho_weyl<S>(n, key.second) * rho_lower<S>(-b, key.second) *
           rho_weyl_inverse<S>(n, key.second);
  };
  if (n > kUpperCacheLimit) return build();
  auto& c = cache<S>();
  return memo(c.mutex, c.upper, UpperKey{n, key.second, b.value()}, build);
}

template <class S>
OpMatrix<S> rho_word(const ElemWord& word, std::int64_t n, std::int64_t a) {
  const int level = static_cast<int>(n);
  if (word.empty()) return OpMatrix<S>::identity(static_cast<std::size_t>(n), level);
  auto factor = [&](const ElemFactor& f) {
    if (f.value.modulus() != n) throw ModulusMismatch("word factor modulus");
    return f.kind == ElemFactor::Kind::Lower ? rho_lower<S>(f.value, a) : rho_upper<S>(f.value, a);
  };
  OpMatrix<S> m = factor(word.front());
  for (std::size_t k = 1; k < word.size(); ++k) m = m * factor(word[k]);
  return m;
}

template <class S>
OpMatrix<S> substitution_operator(const Residue& u) {
  const std::int64_t n = u.modulus();
  const Residue ui = inv(u);
  OpMatrix<S> m(n, n, static_cast<int>(n));
  for (std::int64_t x = 0; x < n; ++x) m(x, (ui * x).value()) = ScalarTraits<S>::one(static_cast<int>(n));
  return m;
}

ExactMatrix intertwiner_solve(const Sl2Elem& g, std::int64_t a) {
  const std::int64_t n = g.modulus();
  const int level = static_cast<int>(n);
  const auto un = static_cast<std::size_t>(n);
  detail::BinomialSystem sys(un * un, level);
  for (const HeisPoint& h : {HeisPoint(1, 0, 0, n), HeisPoint(0, 1, 0, n)}) {
    detail::add_intertwining(sys, pi_monomial<CycloNum>(h, a), pi_monomial<CycloNum>(sl2_act(g, h), a));
  }
  const std::size_t dim = sys.dimension();
  if (dim != 1) {
    throw DegenerateSolutionSpace("intertwiner space has dimension " + std::to_string(dim));
  }
  const auto x = sys.solution(level);
  std::size_t first = 0;
  while (x[first].is_zero()) ++first;
  const CycloNum scale = x[first].inverse();
  ExactMatrix m(un, un, level);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!x[k].is_zero()) m(k / un, k % un) = x[k] * scale;
  }
  return m;
}

Mat2 cayley(const Mat2& g) {
  const Mat2 id = Mat2::identity(g.modulus());
  return (g + id) * (g - id).inverse();
}

template <class S>
CharacterValue<S> char_formula_check(const Sl2Elem& g) {
  const std::int64_t p = g.modulus();
  require_prime(p);
  const Residue d = (g.matrix() - Mat2::identity(p)).det();
  if (!d.is_unit()) throw Singular("g - I is not invertible");
  return {rho<S>(g).matrix.trace(), legendre(-d.value(), p)};
}

template <class S>
S trace_with_pi(const OpMatrix<S>& m, const HeisPoint& h, std::int64_t a) {
  const auto mono = pi_monomial<S>(h, a);
  S acc = ScalarTraits<S>::zero(m.level());
  for (std::size_t k = 0; k < mono.col.size(); ++k) acc += m(mono.col[k], k) * mono.coef[k];
  return acc;
}

template <class S>
S ch_tau(const Sl2Elem& g, const HeisPoint& h) {
  if (g.modulus() != h.modulus()) throw ModulusMismatch("ch_tau across moduli");
  return trace_with_pi(rho<S>(g).matrix, h);
}

template <class S>
S ch_tau_closed_form(const Sl2Elem& g, const HeisPoint& h) {
  const std::int64_t p = g.modulus();
  require_prime(p);
  if (h.modulus() != p) throw ModulusMismatch("ch_tau across moduli");
  const Mat2 kappa = cayley(g.matrix());
  const Residue d = (g.matrix() - Mat2::identity(p)).det();
  auto [kt, kw] = kappa.apply(h.t, h.w);
  const Residue phase = inv(Residue(4, p)) * symplectic(kt, kw, h.t, h.w) + h.z;
  const int level = static_cast<int>(p);
  return ScalarTraits<S>::integer(level, legendre(-d.value(), p)) *
         ScalarTraits<S>::root(level, phase.value());
}

template <class S>
S ch_tau_convolution(const Sl2Elem& g1, const Sl2Elem& g2, const HeisPoint& h) {
  const std::int64_t p = h.modulus();
  require_prime(p);
  const int level = static_cast<int>(p);
  const OpMatrix<S> r1 = rho<S>(g1).matrix;
  const OpMatrix<S> r2 = rho<S>(g2).matrix;
  S acc = ScalarTraits<S>::zero(level);
  for (std::int64_t t = 0; t < p; ++t) {
    for (std::int64_t w = 0; w < p; ++w) {
      const HeisPoint v(t, w, 0, p);
      acc += trace_with_pi(r2, v) * trace_with_pi(r1, h_mul(h_inv(v), h));
    }
  }
  return acc * ScalarTraits<S>::rational(level, 1, p);
}

template <class S>
OpMatrix<S> crt_perm_matrix(std::int64_t n1, std::int64_t n2) {
  if (std::gcd(n1, n2) != 1) throw NotCoprime("CRT factors must be coprime");
  const std::int64_t n = n1 * n2;
  OpMatrix<S> m(n, n, static_cast<int>(n));
  for (std::int64_t x = 0; x < n; ++x) {
    m((x % n1) * n2 + x % n2, x) = ScalarTraits<S>::one(static_cast<int>(n));
  }
  return m;
}

template <class S>
OpMatrix<S> crt_conjugate(const OpMatrix<S>& m, std::int64_t n1, std::int64_t n2) {
  if (std::gcd(n1, n2) != 1) throw NotCoprime("CRT factors must be coprime");
  const std::int64_t n = n1 * n2;
  if (static_cast<std::int64_t>(m.rows()) != n || !m.is_square()) {
    throw InvalidParams("matrix size does not match n1 n2");
  }
  std::vector<std::size_t> r(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < n; ++x) r[x] = static_cast<std::size_t>((x % n1) * n2 + x % n2);
  OpMatrix<S> out(m.rows(), m.cols(), m.level());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(r[i], r[j]) = m(i, j);
  }
  return out;
}

TensorDftResult tensor_dft_check(std::int64_t n1, std::int64_t n2) {
  if (std::gcd(n1, n2) != 1) throw NotCoprime("CRT factors must be coprime");
  const std::int64_t n = n1 * n2;
  const int level = static_cast<int>(n);
  const std::int64_t a = (n1 + n2) % n;
  const ExactMatrix lhs = kron(lift(dft_matrix<CycloNum>(n1), level), lift(dft_matrix<CycloNum>(n2), level));
  const ExactMatrix rhs = crt_conjugate(dft_matrix<CycloNum>(n, a), n1, n2);
  return {a, lhs.equals(rhs)};
}

template <class S>
TensorWeilResult<S> tensor_weil_check(std::int64_t n1, std::int64_t n2, const Sl2Elem& g,
                                      double tol) {
  if (std::gcd(n1, n2) != 1) throw NotCoprime("CRT factors must be coprime");
  const std::int64_t n = n1 * n2;
  if (g.modulus() != n) throw ModulusMismatch("g must live mod n1 n2");
  const int level = static_cast<int>(n);
  const OpMatrix<S> lhs = crt_conjugate(rho<S>(g, (n1 + n2) % n).matrix, n1, n2);
  const OpMatrix<S> rhs = kron(relevel(rho<S>(g.reduce(n1)).matrix, level),
                               relevel(rho<S>(g.reduce(n2)).matrix, level));
  std::size_t best = 0;
  double best_abs = -1.0;
  for (std::size_t k = 0; k < rhs.data().size(); ++k) {
    const double v = std::abs(ScalarTraits<S>::embed(rhs.data()[k]));
    if (v > best_abs + 1e-12) {
      best_abs = v;
      best = k;
    }
  }
  const S lambda = lhs.data()[best] / rhs.data()[best];
  const bool proportional = lhs.equals(rhs * lambda, tol);
  return {lambda, proportional, std::abs(ScalarTraits<S>::embed(lambda))};
}

#define WEILREP_INSTANTIATE(S)                                                              \
  template const OpMatrix<S>& dft_matrix<S>(std::int64_t, std::int64_t);                    \
  template S proportionality_constant<S>(std::int64_t, std::int64_t);                       \
  template OpMatrix<S> rho_lower<S>(const Residue&, std::int64_t);                          \
  template const OpMatrix<S>& rho_weyl<S>(std::int64_t, std::int64_t);                      \
  template const OpMatrix<S>& rho_weyl_inverse<S>(std::int64_t, std::int64_t);              \
  template OpMatrix<S> rho_upper<S>(const Residue&, std::int64_t);                          \
  template OpMatrix<S> rho_word<S>(const ElemWord&, std::int64_t, std::int64_t);            \
  template OpMatrix<S> substitution_operator<S>(const Residue&);                            \
  template CharacterValue<S> char_formula_check<S>(const Sl2Elem&);                         \
  template S trace_with_pi<S>(const OpMatrix<S>&, const HeisPoint&, std::int64_t);          \
  template S ch_tau<S>(const Sl2Elem&, const HeisPoint&);                                   \
  template S ch_tau_closed_form<S>(const Sl2Elem&, const HeisPoint&);                       \
  template S ch_tau_convolution<S>(const Sl2Elem&, const Sl2Elem&, const HeisPoint&);       \
  template OpMatrix<S> crt_perm_matrix<S>(std::int64_t, std::int64_t);                      \
  template OpMatrix<S> crt_conjugate<S>(const OpMatrix<S>&, std::int64_t, std::int64_t);    \
  template TensorWeilResult<S> tensor_weil_check<S>(std::int64_t, std::int64_t, const Sl2Elem&, double);

WEILREP_INSTANTIATE(CycloNum)
WEILREP_INSTANTIATE(Complex)

}  // namespace weilrep
