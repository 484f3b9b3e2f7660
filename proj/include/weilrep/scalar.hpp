#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>

#include "weilrep/cyclo.hpp"

namespace weilrep {

using Complex = std::complex<double>;

enum class Backend { Exact, Float };

std::string to_string(Backend backend);
Backend backend_from_string(const std::string& name);

/// Uniform interface over the two scalar backends. `level` is the cyclotomic
/// level N the exact backend works in; the float backend ignores it.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<CycloNum> {
  static constexpr bool exact = true;
  static constexpr Backend backend = Backend::Exact;

  static CycloNum zero(int level) { return CycloNum(level); }
  static CycloNum one(int level) { return CycloNum(level, 1L); }
  static CycloNum integer(int level, std::int64_t v) { return CycloNum(level, static_cast<long>(v)); }
  static CycloNum rational(int level, std::int64_t num, std::int64_t den) {
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return CycloNum::rational(level, r);
  }
  static CycloNum root(int level, std::int64_t k) { return zeta(level, k); }
  static CycloNum inverse(const CycloNum& x) { return x.inverse(); }
  static CycloNum conj(const CycloNum& x) { return x.conj(); }
  static bool is_zero(const CycloNum& x, double /*tol*/) { return x.is_zero(); }
  static bool close(const CycloNum& a, const CycloNum& b, double /*tol*/) { return a == b; }
  static Complex embed(const CycloNum& x) { return x.embed(); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static constexpr Backend backend = Backend::Float;

  static Complex zero(int) { return {0.0, 0.0}; }
  static Complex one(int) { return {1.0, 0.0}; }
  static Complex integer(int, std::int64_t v) { return {static_cast<double>(v), 0.0}; }
  static Complex rational(int, std::int64_t num, std::int64_t den) {
    return {static_cast<double>(num) / static_cast<double>(den), 0.0};
  }
  static Complex root(int level, std::int64_t k) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> *
                              static_cast<long double>(((k % level) + level) % level) / level;
    return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
  }
  static Complex inverse(const Complex& x) { return 1.0 / x; }
  static Complex conj(const Complex& x) { return std::conj(x); }
  static bool is_zero(const Complex& x, double tol) { return std::abs(x) <= tol; }
  static bool close(const Complex& a, const Complex& b, double tol) {
    return std::abs(a - b) <= tol;
  }
  static Complex embed(const Complex& x) { return x; }
};

/// Default float tolerance for n x n operator identities.
inline double default_tolerance(std::int64_t n) {
  return 1e-9 * static_cast<double>(n < 1 ? 1 : n);
}

}  // namespace weilrep
