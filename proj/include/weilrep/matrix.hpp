#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weilrep/errors.hpp"
#include "weilrep/scalar.hpp"

namespace weilrep {

/// Dense row-major matrix over one scalar backend.
template <class S>
class OpMatrix {
 public:
  using Scalar = S;
  using Traits = ScalarTraits<S>;

  OpMatrix() = default;
  OpMatrix(std::size_t rows, std::size_t cols, int level)
      : rows_(rows), cols_(cols), level_(level), data_(rows * cols, Traits::zero(level)) {}

  static OpMatrix identity(std::size_t n, int level) {
    OpMatrix m(n, n, level);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Traits::one(level);
    return m;
  }

  static OpMatrix diagonal(const std::vector<S>& diag, int level) {
    OpMatrix m(diag.size(), diag.size(), level);
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int level() const { return level_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<S>& data() const { return data_; }

  bool is_diagonal() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i != j && !Traits::is_zero((*this)(i, j), 0.0)) return false;
      }
    }
    return true;
  }

  S trace() const {
    S t = Traits::zero(level_);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  OpMatrix transpose() const {
    OpMatrix t(cols_, rows_, level_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  OpMatrix conj_transpose() const {
    OpMatrix t(cols_, rows_, level_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = Traits::conj((*this)(i, j));
    }
    return t;
  }

  OpMatrix& operator*=(const S& factor) {
    for (auto& x : data_) x *= factor;
    return *this;
  }

  OpMatrix& operator+=(const OpMatrix& other) {
    require_same_shape(other);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
  }

  OpMatrix& operator-=(const OpMatrix& other) {
    require_same_shape(other);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
  }

  friend OpMatrix operator+(OpMatrix a, const OpMatrix& b) { return a += b; }
  friend OpMatrix operator-(OpMatrix a, const OpMatrix& b) { return a -= b; }
  friend OpMatrix operator*(OpMatrix a, const S& s) { return a *= s; }
  friend OpMatrix operator*(const S& s, OpMatrix a) { return a *= s; }

  /// Exact equality for the exact backend; entrywise |a - b| <= tol for float.
  bool equals(const OpMatrix& other, double tol = 0.0) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!Traits::close(data_[k], other.data_[k], tol)) return false;
    }
    return true;
  }

  /// Largest entrywise distance in the complex embedding.
  double max_abs_diff(const OpMatrix& other) const {
    require_same_shape(other);
    double worst = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k) {
      worst = std::max(worst, std::abs(Traits::embed(data_[k]) - Traits::embed(other.data_[k])));
    }
    return worst;
  }

 private:
  void require_same_shape(const OpMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw InvalidParams("matrix shape mismatch");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int level_ = 1;
  std::vector<S> data_;
};

using ExactMatrix = OpMatrix<CycloNum>;
using FloatMatrix = OpMatrix<Complex>;

namespace detail {

template <class S>
OpMatrix<S> scale_rows(const std::vector<S>& diag, const OpMatrix<S>& b) {
  OpMatrix<S> out = b;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) *= diag[i];
  }
  return out;
}

template <class S>
OpMatrix<S> scale_cols(const OpMatrix<S>& a, const std::vector<S>& diag) {
  OpMatrix<S> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= diag[j];
  }
  return out;
}

template <class S>
std::vector<S> diagonal_of(const OpMatrix<S>& m) {
  std::vector<S> d;
  d.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) d.push_back(m(i, i));
  return d;
}

ExactMatrix multiply_dense(const ExactMatrix& a, const ExactMatrix& b);
FloatMatrix multiply_dense(const FloatMatrix& a, const FloatMatrix& b);

}  // namespace detail

template <class S>
OpMatrix<S> operator*(const OpMatrix<S>& a, const OpMatrix<S>& b) {
  if (a.cols() != b.rows()) throw InvalidParams("matrix product shape mismatch");
  if (b.is_diagonal()) return detail::scale_cols(a, detail::diagonal_of(b));
  if (a.is_diagonal()) return detail::scale_rows(detail::diagonal_of(a), b);
  return detail::multiply_dense(a, b);
}

/// Kronecker product with index pairing (i1, i2) -> i1 * rows(B) + i2.
template <class S>
OpMatrix<S> kron(const OpMatrix<S>& a, const OpMatrix<S>& b) {
  OpMatrix<S> out(a.rows() * b.rows(), a.cols() * b.cols(), a.level());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const S& x = a(i1, j1);
      if (ScalarTraits<S>::is_zero(x, 0.0)) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          out(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * b(i2, j2);
        }
      }
    }
  }
  return out;
}

template <class S>
OpMatrix<S> matrix_power(const OpMatrix<S>& m, unsigned exponent) {
  OpMatrix<S> result = OpMatrix<S>::identity(m.rows(), m.level());
  OpMatrix<S> base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

/// Re-expresses every entry in Q(zeta_M) for a multiple M of the level.
ExactMatrix lift(const ExactMatrix& m, int new_level);

FloatMatrix to_float(const ExactMatrix& m);

}  // namespace weilrep
