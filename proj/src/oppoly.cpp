#include "gl11/oppoly.hpp"

namespace gl11 {

OpPoly::OpPoly(std::vector<QMatrix> coeffs, std::size_t dim) : dim_(dim), c_(std::move(coeffs)) {
  for (const auto& m : c_)
    if (m.rows() != dim_ || m.cols() != dim_) throw Error("operator pencil: coefficient shape mismatch");
  trim();
}

OpPoly OpPoly::scalar(const Poly& p, std::size_t dim) {
  std::vector<QMatrix> c;
  for (const auto& a : p.coeffs()) c.push_back(QMatrix::identity(dim) * a);
  return OpPoly(std::move(c), dim);
}

OpPoly OpPoly::constant(const QMatrix& m) { return OpPoly({m}, m.rows()); }

void OpPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QMatrix OpPoly::coeff(std::size_t d) const { return d < c_.size() ? c_[d] : QMatrix(dim_, dim_); }

QMatrix OpPoly::operator()(const Scalar& at) const {
  QMatrix r(dim_, dim_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= at;
    r += *it;
  }
  return r;
}

OpPoly OpPoly::shifted(const Scalar& a) const {
  std::vector<QMatrix> out(c_.size(), QMatrix(dim_, dim_));
  for (std::size_t d = 0; d < c_.size(); ++d) {
    Scalar p = 1;  // (-a)^(d-j)
    for (std::size_t j = d + 1; j-- > 0;) {
      out[j] += c_[d] * Scalar(binomial(static_cast<long>(d), static_cast<long>(j)) * p);
      p *= -a;
    }
  }
  return OpPoly(std::move(out), dim_);
}

std::vector<QVec> OpPoly::apply(const QVec& v) const {
  std::vector<QVec> out;
  for (const auto& m : c_) out.push_back(m * v);
  return out;
}

OpPoly& OpPoly::operator+=(const OpPoly& o) {
  if (o.dim_ != dim_) throw Error("operator pencil: dimension mismatch");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), QMatrix(dim_, dim_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

OpPoly& OpPoly::operator-=(const OpPoly& o) {
  if (o.dim_ != dim_) throw Error("operator pencil: dimension mismatch");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), QMatrix(dim_, dim_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

OpPoly& OpPoly::operator*=(const Scalar& s) {
  for (auto& m : c_) m *= s;
  trim();
  return *this;
}

OpPoly operator*(const OpPoly& a, const OpPoly& b) {
  if (a.dim_ != b.dim_) throw Error("operator pencil: dimension mismatch");
  if (a.c_.empty() || b.c_.empty()) return OpPoly(a.dim_);
  std::vector<QMatrix> c(a.c_.size() + b.c_.size() - 1, QMatrix(a.dim_, a.dim_));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return OpPoly(std::move(c), a.dim_);
}

OpPoly operator*(const Poly& p, const OpPoly& a) {
  if (p.is_zero() || a.c_.empty()) return OpPoly(a.dim_);
  std::vector<QMatrix> c(p.coeffs().size() + a.c_.size() - 1, QMatrix(a.dim_, a.dim_));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (is_zero(p.coeffs()[i])) continue;
    for (std::size_t j = 0; j < a.c_.size(); ++j) c[i + j] += a.c_[j] * p.coeffs()[i];
  }
  return OpPoly(std::move(c), a.dim_);
}

std::vector<QMatrix> laurent_expand(const OpPoly& num, const Poly& den, std::size_t order) {
  const int k = den.degree();
  if (num.degree() > k) throw Error("not expandable at infinity");
  // 1/den(x) = x^-k * sum_m c_m x^-m.
  auto c = laurent_expand(RatFun(Poly::monomial(1, static_cast<std::size_t>(k)), den), order + static_cast<std::size_t>(k));
  std::vector<QMatrix> out(order + 1, QMatrix(num.dim(), num.dim()));
  for (std::size_t r = 0; r <= order; ++r)
    for (int d = 0; d <= num.degree(); ++d) {
      int m = d - k + static_cast<int>(r);
      if (m < 0) continue;
      out[r] += num.coeff(static_cast<std::size_t>(d)) * c[static_cast<std::size_t>(m)];
    }
  return out;
}

Matrix<RatFun> to_ratfun_matrix(const OpPoly& p) {
  Matrix<RatFun> m(p.dim(), p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j) {
      std::vector<Scalar> c;
      for (const auto& q : p.coeffs()) c.push_back(q(i, j));
      m(i, j) = RatFun(Poly(std::move(c)));
    }
  return m;
}

}  // namespace gl11
