#pragma once

#include <optional>
#include <vector>

#include "gl11/bethe.hpp"

namespace gl11 {

// R(x) on L_li (x) L_lj in the basis v1 v1, v1 v2, v2 v1, v2 v2.
// Throws "R-matrix undefined" when lj.l1 + li.l2 + x = 0.
QMatrix r_matrix(const Weight& li, const Weight& lj, const Scalar& x);

// Delta^op(X) R(bi - bj) = R(bi - bj) Delta(X) for every coefficient of the
// monodromy of L_li(bi) (x) L_lj(bj).
bool verify_r_intertwining(const Weight& li, const Scalar& bi, const Weight& lj, const Scalar& bj);

// Tensor Shapovalov form B_lambda; diagonal in the module basis.
QMatrix shapovalov_tensor(const ModuleSpec& spec);

// Ordered product over i ascending, then j > i ascending, of R^{(i,j)}(b_i - b_j).
QMatrix r_product(const ModuleSpec& spec);

// Gram matrix of B_{lambda,b}(w1, w2) = B_lambda(w1, R w2).
QMatrix form_matrix(const ModuleSpec& spec);

// B(X w1, w2) = (-1)^{|X||w1|} B(w1, iota(X) w2) for the coefficients of x^0..x^-order
// of every T_ij(x).
bool verify_iota(const MonodromyPencil& m, const QMatrix& gram, std::size_t order);

// Gram * T^_Q(x) = T^_Q(x)^t * Gram coefficientwise.
bool verify_self_adjoint(const OpPoly& tq, const QMatrix& gram);

Scalar bilinear(const QMatrix& gram, const QVec& a, const QVec& b);

Poly wronskian(const Poly& f, const Poly& g);

struct NormRow {
  Divisor divisor;
  Scalar lhs;
  // prod Wr(phi, psi)(t_i) / y'(t_i); for repeated roots the eps-limit, absent
  // when that limit has a pole.
  std::optional<Scalar> wronskian_product;
  std::optional<Scalar> rhs_q_prefactor;  // (q2/q1)^l * product
  std::optional<Scalar> rhs_gamma_form;  // q2^l / q1^{2l} * prod Wr(gamma, psi)(t_i) / y'(t_i)
  std::optional<Scalar> rhs_resolved;    // (-1)^l * product
  bool repeated = false;
  bool matches_q_prefactor = false;
  bool matches_resolved = false;
};

NormRow norm_check(const ModuleSpec& spec, const MonodromyPencil& m, const QMatrix& gram, const Divisor& y);
NormRow norm_check(const ModuleSpec& spec, const Divisor& y);

// B(B^(t1), B^(t2)) for two divisors.
Scalar cross_pairing(const MonodromyPencil& m, const QMatrix& gram, const Divisor& y1, const Divisor& y2);
bool orthogonality_check(const ModuleSpec& spec, const Divisor& y1, const Divisor& y2);

}  // namespace gl11
