#pragma once

#include <cstdint>

#include "weilrep/matrix.hpp"

namespace weilrep {

/// Determinant of a float matrix kept as log|det| and a unit phase, so that
/// n^(n/2)-sized values (n ~ 400) do not overflow.
struct LogDet {
  double log_abs = 0.0;
  Complex phase{1.0, 0.0};
  bool zero = false;

  Complex value() const;
};

/// Exact determinant. Small matrices use division-based elimination over
/// Q(zeta_N); larger ones use elimination over split primes with CRT
/// reconstruction. Both are exact.
CycloNum det_exact(const ExactMatrix& m);
CycloNum det_elimination(const ExactMatrix& m);
CycloNum det_multimodular(const ExactMatrix& m);

/// Partial-pivot elimination.
Complex det_float(const FloatMatrix& m);
LogDet log_det(const FloatMatrix& m);

inline CycloNum det(const ExactMatrix& m) { return det_exact(m); }
inline Complex det(const FloatMatrix& m) { return det_float(m); }

/// prod_{0<=x<y<n} (zeta_n^y - zeta_n^x), in Q(zeta_n).
CycloNum vandermonde_det_product(std::int64_t n);
Complex vandermonde_det_product_float(std::int64_t n);

/// The exponent pair (u, v) with 4u + n v = 1 and v in {1, 3}.
struct BezoutPair {
  std::int64_t u;
  std::int64_t v;
};
BezoutPair proportionality_bezout(std::int64_t n);

/// The unique C with C^4 = n^2 and C^n = D, returned as (n^2)^u * D^v.
/// Throws NoSolution when the candidate fails either equation.
CycloNum solve_proportionality_constant(std::int64_t n, const CycloNum& det_value);
Complex solve_proportionality_constant(std::int64_t n, const LogDet& det_value,
                                       double rel_tol = 1e-9);

}  // namespace weilrep
