#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gl11/scalar.hpp"

namespace gl11 {

// Dense univariate polynomial, coefficients lowest degree first. The
// coefficient vector never ends in a zero, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs);
  Poly(std::initializer_list<Scalar> coeffs);

  static Poly constant(const Scalar& c);
  static Poly x();
  static Poly monomial(const Scalar& c, std::size_t degree);
  // x - root
  static Poly linear(const Scalar& root);
  static Poly from_roots(const std::vector<Scalar>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Scalar& leading() const;
  Scalar coeff(std::size_t i) const;
  const std::vector<Scalar>& coeffs() const { return c_; }

  Scalar operator()(const Scalar& at) const;
  Poly derivative() const;
  // p(x - a); the difference shift tau acts as shifted(1).
  Poly shifted(const Scalar& a) const;
  Poly monic() const;
  Poly pow(unsigned e) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Quotient and remainder; throws on division by zero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Exact quotient; throws if b does not divide a.
  static Poly exact_div(const Poly& a, const Poly& b);

 private:
  void trim();
  std::vector<Scalar> c_;
};

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

// Sort key for deterministic ordering: degree, then coefficients from the top.
bool poly_less(const Poly& a, const Poly& b);

// "2x^2-x+1/2"; "0" for the zero polynomial.
std::string to_string(const Poly& p);

}  // namespace gl11
