#include "gl11/ratfun.hpp"

namespace gl11 {

RatFun::RatFun(Poly num, Poly den) {
  if (den.is_zero()) throw Error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = Poly::exact_div(num, g);
    den = Poly::exact_div(den, g);
  }
  Scalar lead = den.leading();
  num *= Scalar(1 / lead);
  den *= Scalar(1 / lead);
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFun RatFun::shifted(const Scalar& a) const { return RatFun(num_.shifted(a), den_.shifted(a)); }

Scalar RatFun::operator()(const Scalar& at) const {
  Scalar d = den_(at);
  if (gl11::is_zero(d)) throw Error("rational function evaluated at a pole");
  return num_(at) / d;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw Error("inverse of the zero rational function");
  return RatFun(den_, num_);
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (den_ == o.den_) return *this = RatFun(num_ + o.num_, den_);
  return *this = RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun& RatFun::operator-=(const RatFun& o) {
  if (den_ == o.den_) return *this = RatFun(num_ - o.num_, den_);
  return *this = RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  return *this = RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw Error("rational function division by zero");
  return *this = RatFun(num_ * o.den_, den_ * o.num_);
}

std::vector<Scalar> laurent_expand(const RatFun& f, std::size_t order) {
  const int dn = f.den().degree();
  if (f.num().degree() > dn) throw Error("not expandable at infinity");
  // With u = 1/x: f = N(u)/D(u), N(u) = u^dn num(1/u), D(u) = u^dn den(1/u).
  std::vector<Scalar> nu(order + 1, Scalar(0)), du(static_cast<std::size_t>(dn) + 1, Scalar(0));
  for (int i = 0; i <= f.num().degree(); ++i) {
    auto pos = static_cast<std::size_t>(dn - i);
    if (pos <= order) nu[pos] = f.num().coeff(static_cast<std::size_t>(i));
  }
  for (int i = 0; i <= dn; ++i) du[static_cast<std::size_t>(dn - i)] = f.den().coeff(static_cast<std::size_t>(i));
  std::vector<Scalar> c(order + 1, Scalar(0));
  const Scalar inv = 1 / du[0];
  for (std::size_t m = 0; m <= order; ++m) {
    Scalar s = nu[m];
    for (std::size_t j = 1; j <= m && j < du.size(); ++j) s -= du[j] * c[m - j];
    c[m] = s * inv;
  }
  return c;
}

EpsPoleError::EpsPoleError(int order)
    : Error("non-removable singularity (pole of order " + std::to_string(order) + ")"), order_(order) {}

Scalar eps_limit(const EpsElem& v) {
  const auto& d = v.den().coeffs();
  int order = 0;
  while (is_zero(d[static_cast<std::size_t>(order)])) ++order;
  if (order > 0) throw EpsPoleError(order);
  return v.num().coeff(0) / d[0];
}

}  // namespace gl11
