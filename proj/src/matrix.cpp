#include "weilrep/matrix.hpp"

#include <cmath>
#include <cstdint>

namespace weilrep {
namespace detail {
namespace {

Integer from_int128(__int128 v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return Integer(static_cast<long>(v));
  bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1
                                 : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(u >> 64));
  Integer lo(static_cast<unsigned long>(u & UINT64_MAX));
  Integer out = (hi << 64) + lo;
  return negative ? Integer(-out) : out;
}

// Numerators of every entry rescaled to one common denominator.
struct IntegerForm {
  Integer denominator = 1;
  std::vector<Integer> coeffs;  // entry-major, `degree` per entry
  std::vector<char> nonzero;    // per entry
  std::size_t max_bits = 0;
};

IntegerForm integer_form(const ExactMatrix& m, std::size_t degree) {
  IntegerForm f;
  for (const auto& x : m.data()) {
    mpz_lcm(f.denominator.get_mpz_t(), f.denominator.get_mpz_t(),
            x.denominator().get_mpz_t());
  }
  f.coeffs.resize(m.data().size() * degree);
  f.nonzero.resize(m.data().size(), 0);
  for (std::size_t e = 0; e < m.data().size(); ++e) {
    const auto& x = m.data()[e];
    if (x.is_zero()) continue;
    f.nonzero[e] = 1;
    Integer scale = f.denominator / x.denominator();
    for (std::size_t t = 0; t < degree; ++t) {
      Integer& c = f.coeffs[e * degree + t];
      c = x.numerators()[t] * scale;
      if (c != 0) f.max_bits = std::max(f.max_bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    }
  }
  return f;
}

std::size_t bit_length(std::uint64_t v) {
  std::size_t b = 0;
  while (v > 0) {
    ++b;
    v >>= 1U;
  }
  return b;
}

}  // namespace

ExactMatrix multiply_dense(const ExactMatrix& a, const ExactMatrix& b) {
  const int level = a.level();
  if (b.level() != level) throw ModulusMismatch("matrix product across cyclotomic levels");
  const auto& fd = field_data(level);
  const auto deg = static_cast<std::size_t>(fd.degree);
  const std::size_t n = a.rows(), inner = a.cols(), p = b.cols();
  const std::size_t wide = 2 * deg - 1;

  IntegerForm fa = integer_form(a, deg);
  // b is consumed column-major for locality
  ExactMatrix bt = b.transpose();
  IntegerForm fb = integer_form(bt, deg);
  const Integer out_den = fa.denominator * fb.denominator;

  const std::size_t headroom =
      bit_length(deg * inner) + bit_length(1 + deg * static_cast<std::uint64_t>(fd.max_power_coeff)) + 2;
  const bool small = fa.max_bits <= 62 && fb.max_bits <= 62 &&
                     fa.max_bits + fb.max_bits + headroom <= 126;

  // nonzero coefficient positions per entry of a
  std::vector<std::vector<std::uint32_t>> support(a.data().size());
  for (std::size_t e = 0; e < a.data().size(); ++e) {
    if (!fa.nonzero[e]) continue;
    for (std::size_t t = 0; t < deg; ++t) {
      if (fa.coeffs[e * deg + t] != 0) support[e].push_back(static_cast<std::uint32_t>(t));
    }
  }

  ExactMatrix out(n, p, level);
  if (small) {
    std::vector<std::int64_t> ia(fa.coeffs.size()), ib(fb.coeffs.size());
    for (std::size_t k = 0; k < ia.size(); ++k) ia[k] = fa.coeffs[k].get_si();
    for (std::size_t k = 0; k < ib.size(); ++k) ib[k] = fb.coeffs[k].get_si();
    std::vector<__int128> acc(wide);
    std::vector<Integer> nums(deg);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < p; ++j) {
        std::fill(acc.begin(), acc.end(), 0);
        bool any = false;
        for (std::size_t k = 0; k < inner; ++k) {
          const std::size_t ea = i * inner + k, eb = j * inner + k;
          if (!fa.nonzero[ea] || !fb.nonzero[eb]) continue;
          any = true;
          const std::int64_t* bv = &ib[eb * deg];
          for (auto s : support[ea]) {
            const __int128 av = ia[ea * deg + s];
            __int128* dst = &acc[s];
            for (std::size_t t = 0; t < deg; ++t) dst[t] += av * bv[t];
          }
        }
        if (!any) continue;
        for (std::size_t t = wide; t-- > deg;) {
          const __int128 c = acc[t];
          if (c == 0) continue;
          const auto& row = fd.powers[t % static_cast<std::size_t>(level)];
          for (std::size_t r = 0; r < deg; ++r) acc[r] += c * row[r];
        }
        for (std::size_t t = 0; t < deg; ++t) nums[t] = from_int128(acc[t]);
        out(i, j) = CycloNum::from_integer_poly(level, nums, out_den);
      }
    }
    return out;
  }

  std::vector<Integer> acc(wide);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      for (auto& c : acc) c = 0;
      bool any = false;
      for (std::size_t k = 0; k < inner; ++k) {
        const std::size_t ea = i * inner + k, eb = j * inner + k;
        if (!fa.nonzero[ea] || !fb.nonzero[eb]) continue;
        any = true;
        for (auto s : support[ea]) {
          const Integer& av = fa.coeffs[ea * deg + s];
          for (std::size_t t = 0; t < deg; ++t) {
            const Integer& bv = fb.coeffs[eb * deg + t];
            if (bv != 0) mpz_addmul(acc[s + t].get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
          }
        }
      }
      if (!any) continue;
      out(i, j) = CycloNum::from_integer_poly(level, acc, out_den);
    }
  }
  return out;
}

FloatMatrix multiply_dense(const FloatMatrix& a, const FloatMatrix& b) {
  FloatMatrix out(a.rows(), b.cols(), a.level());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex x = a(i, k);
      if (x == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

}  // namespace detail

ExactMatrix lift(const ExactMatrix& m, int new_level) {
  ExactMatrix out(m.rows(), m.cols(), new_level);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).lift(new_level);
  }
  return out;
}

FloatMatrix to_float(const ExactMatrix& m) {
  FloatMatrix out(m.rows(), m.cols(), m.level());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).embed();
  }
  return out;
}

}  // namespace weilrep
