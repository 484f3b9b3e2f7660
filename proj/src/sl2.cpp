#include "weilrep/sl2.hpp"

#include "weilrep/errors.hpp"

namespace weilrep {

Mat2 Mat2::identity(std::int64_t n) {
  return {Residue(1, n), Residue(0, n), Residue(0, n), Residue(1, n)};
}

Mat2 Mat2::zero(std::int64_t n) {
  return {Residue(0, n), Residue(0, n), Residue(0, n), Residue(0, n)};
}

Mat2 Mat2::inverse() const {
  const Residue det_value = det();
  if (!det_value.is_unit()) throw Singular("2x2 matrix is not invertible");
  const Residue k = inv(det_value);
  return {k * d, -(k * b), -(k * c), k * a};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 operator+(const Mat2& x, const Mat2& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
  return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

Mat2 operator*(std::int64_t k, const Mat2& x) { return {x.a * k, x.b * k, x.c * k, x.d * k}; }

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m.a.value() << "," << m.b.value() << "],[" << m.c.value() << ","
            << m.d.value() << "]] mod " << m.modulus();
}

Sl2Elem::Sl2Elem(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t n)
    : Sl2Elem(Mat2{Residue(a, n), Residue(b, n), Residue(c, n), Residue(d, n)}) {}

Sl2Elem::Sl2Elem(const Mat2& m) : m_(m) {
  if (m.det().value() != 1 % m.modulus()) throw InvalidParams("determinant is not 1");
}

Sl2Elem Sl2Elem::identity(std::int64_t n) { return Sl2Elem(Mat2::identity(n)); }

Sl2Elem Sl2Elem::weyl(std::int64_t n) { return Sl2Elem(0, 1, -1, 0, n); }

Sl2Elem Sl2Elem::upper(const Residue& b) {
  const auto n = b.modulus();
  return Sl2Elem(Mat2{Residue(1, n), b, Residue(0, n), Residue(1, n)});
}

Sl2Elem Sl2Elem::lower(const Residue& c) {
  const auto n = c.modulus();
  return Sl2Elem(Mat2{Residue(1, n), Residue(0, n), c, Residue(1, n)});
}

Sl2Elem Sl2Elem::diag(const Residue& a) {
  const auto n = a.modulus();
  return Sl2Elem(Mat2{a, Residue(0, n), Residue(0, n), inv(a)});
}

Sl2Elem Sl2Elem::inverse() const { return Sl2Elem(Mat2{m_.d, -m_.b, -m_.c, m_.a}); }

Sl2Elem Sl2Elem::reduce(std::int64_t divisor) const {
  if (divisor < 1 || modulus() % divisor != 0) throw ModulusMismatch("not a divisor of the modulus");
  return Sl2Elem(m_.a.value(), m_.b.value(), m_.c.value(), m_.d.value(), divisor);
}

std::ostream& operator<<(std::ostream& os, const Sl2Elem& g) { return os << g.matrix(); }

Sl2Elem random_sl2(std::int64_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(0, n - 1);
  while (true) {
    Mat2 m{Residue(dist(rng), n), Residue(dist(rng), n), Residue(dist(rng), n),
           Residue(dist(rng), n)};
    if (m.det().value() == 1 % n) return Sl2Elem(m);
  }
}

}  // namespace weilrep
