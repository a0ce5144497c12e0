#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "kzr/errors.hpp"
#include "kzr/exactnum/field_scalar.hpp"

namespace kzr {

/// Dense row-major matrix over a commutative ring T. Exact division is only
/// required by determinant() and inverse(), which assume T is a field.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw ShapeMismatch("matrix entry count " + std::to_string(data_.size()) + " != " +
                          std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ShapeMismatch("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix column(std::vector<T> entries) {
    const std::size_t n = entries.size();
    return Matrix(n, 1, std::move(entries));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<T>& entries() const { return data_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix column_at(std::size_t j) const {
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  static Matrix from_columns(const std::vector<Matrix>& columns) {
    if (columns.empty()) return {};
    Matrix m(columns.front().rows(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].cols() != 1 || columns[j].rows() != m.rows()) {
        throw ShapeMismatch("from_columns expects equal-length column vectors");
      }
      for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = columns[j](i, 0);
    }
    return m;
  }

  bool is_zero_matrix() const {
    for (const auto& e : data_) {
      if (!is_zero(e)) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const { return is_square() && *this == transpose(); }

  T trace() const {
    require_square("trace");
    T sum(0);
    for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, i);
    return sum;
  }

  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& e : data_) out.push_back(f(e));
    return Matrix<U>(rows_, cols_, std::move(out));
  }

  Matrix& operator+=(const Matrix& rhs) {
    require_same_shape(rhs, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs) {
    require_same_shape(rhs, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& scalar) {
    for (auto& e : data_) e *= scalar;
    return *this;
  }

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator-(Matrix m) {
    for (auto& e : m.data_) e = -e;
    return m;
  }
  friend Matrix operator*(Matrix lhs, const T& scalar) { return lhs *= scalar; }
  friend Matrix operator*(const T& scalar, Matrix rhs) {
    for (auto& e : rhs.data_) e = scalar * e;
    return rhs;
  }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) {
      throw ShapeMismatch("cannot multiply " + lhs.shape() + " by " + rhs.shape());
    }
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
      for (std::size_t k = 0; k < lhs.cols_; ++k) {
        const T& a = lhs(i, k);
        if (is_zero(a)) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
      }
    }
    return out;
  }
  friend bool operator==(const Matrix& lhs, const Matrix& rhs) {
    return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
  }

  /// Fraction-free (Bareiss) determinant.
  T determinant() const {
    require_square("determinant");
    if (rows_ == 0) return T(1);
    Matrix m = *this;
    T previous(1);
    bool negate = false;
    const std::size_t n = rows_;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (!m.pivot_into_place(k, negate)) return T(0);
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
        }
        m(i, k) = T(0);
      }
      previous = m(k, k);
    }
    T det = m(n - 1, n - 1);
    return negate ? -det : det;
  }

  /// Exact inverse. 2x2 uses the adjugate; larger sizes use fraction-free
  /// Gauss-Jordan elimination on [M | I], whose left block ends as d*I.
  Matrix inverse() const {
    require_square("inverse");
    const std::size_t n = rows_;
    if (n == 2) {
      const T det = (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
      if (is_zero(det)) throw SingularMatrix("matrix is singular (zero determinant)");
      Matrix inv{{(*this)(1, 1), -(*this)(0, 1)}, {-(*this)(1, 0), (*this)(0, 0)}};
      for (auto& e : inv.data_) e = e / det;
      return inv;
    }
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = T(1);
    }
    T previous(1);
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (!aug.pivot_into_place(k, negate)) throw SingularMatrix("matrix is singular");
      const T pivot = aug(k, k);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == k) continue;
        const T factor = aug(i, k);
        for (std::size_t j = 0; j < 2 * n; ++j) {
          aug(i, j) = (pivot * aug(i, j) - factor * aug(k, j)) / previous;
        }
      }
      previous = pivot;
    }
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const T& d = aug(i, i);
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j) / d;
    }
    return inv;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_square(const char* what) const {
    if (!is_square()) throw ShapeMismatch(std::string(what) + " needs a square matrix, got " + shape());
  }
  void require_same_shape(const Matrix& rhs, const char* op) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
      throw ShapeMismatch("shape mismatch for '" + std::string(op) + "': " + shape() + " vs " +
                          rhs.shape());
    }
  }
  bool pivot_into_place(std::size_t k, bool& negate) {
    if (!is_zero((*this)(k, k))) return true;
    for (std::size_t r = k + 1; r < rows_; ++r) {
      if (!is_zero((*this)(r, k))) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(k, j), (*this)(r, j));
        negate = !negate;
        return true;
      }
    }
    return false;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using FieldMatrix = Matrix<FieldScalar>;

template <class Real>
Matrix<Real> to_real(const FieldMatrix& m) {
  return m.map([](const FieldScalar& x) { return x.to<Real>(); });
}

/// Largest absolute entry.
template <class Real>
Real max_abs(const Matrix<Real>& m) {
  Real best = 0;
  for (const auto& e : m.entries()) best = std::max(best, e < 0 ? -e : e);
  return best;
}

template <class Real>
Real frobenius_norm(const Matrix<Real>& m) {
  Real sum = 0;
  for (const auto& e : m.entries()) sum += e * e;
  return std::sqrt(sum);
}

}  // namespace kzr
