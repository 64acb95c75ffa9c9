#pragma once

#include <vector>

#include "gl11/matrix.hpp"
#include "gl11/poly.hpp"

namespace gl11 {

// Polynomial in x with square matrix coefficients, lowest degree first and
// without trailing zero coefficients.
class OpPoly {
 public:
  explicit OpPoly(std::size_t dim = 0) : dim_(dim) {}
  OpPoly(std::vector<QMatrix> coeffs, std::size_t dim);

  static OpPoly scalar(const Poly& p, std::size_t dim);
  static OpPoly constant(const QMatrix& m);

  std::size_t dim() const { return dim_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  QMatrix coeff(std::size_t d) const;
  const std::vector<QMatrix>& coeffs() const { return c_; }

  QMatrix operator()(const Scalar& at) const;
  // x -> x - a
  OpPoly shifted(const Scalar& a) const;
  // Coefficient vectors of x^d applied to v.
  std::vector<QVec> apply(const QVec& v) const;

  OpPoly& operator+=(const OpPoly& o);
  OpPoly& operator-=(const OpPoly& o);
  OpPoly& operator*=(const Scalar& s);

  friend OpPoly operator+(OpPoly a, const OpPoly& b) { return a += b; }
  friend OpPoly operator-(OpPoly a, const OpPoly& b) { return a -= b; }
  friend OpPoly operator*(OpPoly a, const Scalar& s) { return a *= s; }
  friend OpPoly operator*(const Scalar& s, OpPoly a) { return a *= s; }
  friend OpPoly operator*(const OpPoly& a, const OpPoly& b);
  friend OpPoly operator*(const Poly& p, const OpPoly& a);
  friend bool operator==(const OpPoly& a, const OpPoly& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

 private:
  void trim();
  std::size_t dim_;
  std::vector<QMatrix> c_;
};

// Coefficients of x^0, x^-1, ..., x^-order of num(x)/den(x) at infinity;
// requires deg num <= deg den.
std::vector<QMatrix> laurent_expand(const OpPoly& num, const Poly& den, std::size_t order);

// Entries as polynomials in x.
Matrix<RatFun> to_ratfun_matrix(const OpPoly& p);

}  // namespace gl11
