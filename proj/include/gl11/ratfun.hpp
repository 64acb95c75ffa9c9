#pragma once

#include <vector>

#include "gl11/poly.hpp"

namespace gl11 {

// num/den with den monic and gcd(num, den) = 1, so equality is structural.
class RatFun {
 public:
  RatFun() : den_(Poly::constant(1)) {}
  RatFun(const Scalar& s) : num_(Poly::constant(s)), den_(Poly::constant(1)) {}  // NOLINT
  RatFun(int s) : RatFun(Scalar(s)) {}                                           // NOLINT
  RatFun(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}                // NOLINT
  RatFun(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  // f(x - a)
  RatFun shifted(const Scalar& a) const;
  // Throws at a pole.
  Scalar operator()(const Scalar& at) const;
  RatFun inverse() const;

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend RatFun operator-(const RatFun& a) { return RatFun(-a.num_, a.den_); }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Poly num_, den_;
};

// Coefficients of x^0, x^-1, ..., x^-order of the expansion at infinity.
// Throws "not expandable at infinity" when deg num > deg den.
std::vector<Scalar> laurent_expand(const RatFun& f, std::size_t order);

// Elements of Q(eps) are RatFun in the indeterminate eps.
using EpsElem = RatFun;

class EpsPoleError : public Error {
 public:
  explicit EpsPoleError(int order);
  int pole_order() const { return order_; }

 private:
  int order_;
};

// Value at eps = 0; throws EpsPoleError when the reduced denominator vanishes.
Scalar eps_limit(const EpsElem& v);

}  // namespace gl11
