#pragma once

#include <cstddef>
#include <vector>

#include "gl11/ratfun.hpp"
#include "gl11/scalar.hpp"

namespace gl11 {

template <class T>
struct Field;

template <>
struct Field<Scalar> {
  static Scalar zero() { return Scalar(0); }
  static Scalar one() { return Scalar(1); }
  static bool is_zero(const Scalar& s) { return sgn(s) == 0; }
};

template <>
struct Field<RatFun> {
  static RatFun zero() { return RatFun(); }
  static RatFun one() { return RatFun(1); }
  static bool is_zero(const RatFun& f) { return f.is_zero(); }
};

template <class T>
using Vec = std::vector<T>;

// Dense row-major matrix over an exact field.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Field<T>::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Field<T>::one();
    return m;
  }
  static Matrix from_columns(const std::vector<Vec<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<T> column(std::size_t j) const {
    Vec<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<Vec<T>> columns() const {
    std::vector<Vec<T>> out;
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!Field<T>::is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (Field<T>::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (!Field<T>::is_zero(bkj)) c(i, j) += aik * bkj;
        }
      }
    return c;
  }
  friend Vec<T> operator*(const Matrix& a, const Vec<T>& v) {
    if (a.cols_ != v.size()) throw Error("matrix-vector product: shape mismatch");
    Vec<T> out(a.rows_, Field<T>::zero());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!Field<T>::is_zero(a(i, k)) && !Field<T>::is_zero(v[k])) out[i] += a(i, k) * v[k];
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum: shape mismatch");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Scalar>;
using QVec = Vec<Scalar>;

template <class T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

// Reduced row echelon form by Gauss-Jordan elimination.
template <class T>
Echelon<T> rref(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && Field<T>::is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    T inv = Field<T>::one() / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || Field<T>::is_zero(m(i, col))) continue;
      T f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!Field<T>::is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

// Kernel basis as columns, one per free column of the echelon form.
template <class T>
Matrix<T> nullspace(const Matrix<T>& m) {
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<T> v(m.cols(), Field<T>::zero());
    v[f] = Field<T>::one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return Matrix<T>::from_columns(basis, m.cols());
}

// Throws if singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error("inverse of a non-square matrix");
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Field<T>::one();
  }
  auto e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw Error("matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

template <class T>
T determinant(Matrix<T> m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error("determinant of a non-square matrix");
  T det = Field<T>::one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && Field<T>::is_zero(m(p, col))) ++p;
    if (p == n) return Field<T>::zero();
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    T inv = Field<T>::one() / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (Field<T>::is_zero(m(i, col))) continue;
      T f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw Error("hstack: row mismatch");
  Matrix<T> c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) throw Error("vstack: column mismatch");
  Matrix<T> c(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) c(a.rows() + i, j) = b(i, j);
  }
  return c;
}

template <class T>
Matrix<T> matrix_power(const Matrix<T>& m, std::size_t e) {
  Matrix<T> r = Matrix<T>::identity(m.rows());
  for (std::size_t i = 0; i < e; ++i) r = r * m;
  return r;
}

inline bool is_zero_vec(const QVec& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace gl11
