#include "gl11/poly.hpp"

#include <algorithm>

namespace gl11 {

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

Poly Poly::constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }

Poly Poly::x() { return Poly({Scalar(0), Scalar(1)}); }

Poly Poly::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> v(degree + 1, Scalar(0));
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Scalar& root) { return Poly({Scalar(-root), Scalar(1)}); }

Poly Poly::from_roots(const std::vector<Scalar>& roots) {
  Poly p = constant(1);
  for (const auto& r : roots) p *= linear(r);
  return p;
}

void Poly::trim() {
  while (!c_.empty() && gl11::is_zero(c_.back())) c_.pop_back();
}

const Scalar& Poly::leading() const {
  if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
  return c_.back();
}

Scalar Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }

Scalar Poly::operator()(const Scalar& at) const {
  Scalar r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + *it;
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Scalar(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::shifted(const Scalar& a) const {
  // Horner in the polynomial ring with x replaced by (x - a).
  Poly r;
  const Poly lin = linear(a);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= lin;
    r += constant(*it);
  }
  return r;
}

Poly Poly::monic() const {
  if (c_.empty()) return {};
  Poly r = *this;
  r *= Scalar(1 / leading());
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(1);
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (gl11::is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& s) {
  if (gl11::is_zero(s)) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Scalar> rem = a.c_;
  std::vector<Scalar> quo(a.c_.size() - b.c_.size() + 1, Scalar(0));
  const Scalar inv = 1 / b.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    Scalar f = rem[k + b.c_.size() - 1] * inv;
    quo[k] = f;
    if (gl11::is_zero(f)) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("polynomial division is not exact");
  return q;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = Poly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    int c = cmp(a.coeff(i), b.coeff(i));
    if (c != 0) return c < 0;
  }
  return false;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    const Scalar c = p.coeff(static_cast<std::size_t>(d));
    if (is_zero(c)) continue;
    const Scalar a = abs(c);
    if (sgn(c) < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (d == 0 || a != 1) out += to_string(Scalar(a));
    if (d >= 1) out += "x";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

}  // namespace gl11
