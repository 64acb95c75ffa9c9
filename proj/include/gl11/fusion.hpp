#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gl11/bethe.hpp"

namespace gl11 {

using RatMatrix = Matrix<RatFun>;

// Operator-valued rational function num(x) / den(x) with a scalar denominator.
struct OpRat {
  OpPoly num;
  Poly den;

  OpRat shifted(const Scalar& a) const { return {num.shifted(a), den.shifted(a)}; }
  std::size_t dim() const { return num.dim(); }
};

OpRat operator*(const OpRat& a, const OpRat& b);
OpRat operator+(const OpRat& a, const OpRat& b);
OpRat operator*(const RatFun& s, const OpRat& a);
// Equality after clearing denominators.
bool same(const OpRat& a, const OpRat& b);
RatMatrix to_ratmatrix(const OpRat& a);

// Normalized anti-symmetrizer A_m and symmetrizer H_m on (C^{1|1})^{tensor m},
// with adjacent transpositions acting as graded flips.
std::pair<QMatrix, QMatrix> symmetrizers(std::size_t m);

// Supertrace over m auxiliary copies of S_m Q T(x) Q T(x-1) ... Q T(x-m+1),
// S_m = A_m (antisymmetric) or H_m. Denominator prod_{i<m} N(x-i).
OpRat fused_transfer_blocks(const MonodromyPencil& mp, const Scalar& q1, const Scalar& q2, std::size_t m,
                            bool symmetric);
// Route two: the T11/T22/T12/T21 expansion, rescaled by (-1)^m q2^{m-1}.
OpRat fused_transfer_expansion(const MonodromyPencil& mp, const Scalar& q1, const Scalar& q2, std::size_t m);

struct RouteComparison {
  bool agree = false;
  std::optional<std::size_t> witness_degree;  // first numerator coefficient that differs
};

RouteComparison compare_routes(const MonodromyPencil& mp, const Scalar& q1, const Scalar& q2, std::size_t m);

// [T_m(x1), T_m'(x2)] = 0 for all numerator coefficients.
bool fused_commute(const OpRat& a, const OpRat& b);

// Polynomial in tau with matrix coefficients on the left: sum_a C_a(x) tau^a,
// tau f(x) = f(x-1) tau. Negative degrees allowed.
class DiffOp {
 public:
  explicit DiffOp(std::size_t dim = 1) : dim_(dim) {}
  static DiffOp monomial(RatMatrix c, int degree);
  static DiffOp identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::map<int, RatMatrix>& terms() const { return c_; }
  RatMatrix coeff(int degree) const;
  int lowest() const;
  int highest() const;
  bool is_zero() const { return c_.empty(); }
  DiffOp truncated(int max_degree) const;

  // (C tau^a)^{-1} = C^{-1}(x+a) tau^{-a}; throws unless a single term.
  DiffOp monomial_inverse() const;
  // Inverse with the lowest term invertible, correct through tau^max_degree.
  DiffOp series_inverse(int max_degree) const;

  friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

 private:
  void add_term(int degree, const RatMatrix& m);
  std::size_t dim_;
  std::map<int, RatMatrix> c_;
};

RatMatrix shifted(const RatMatrix& m, const Scalar& a);
RatMatrix scalar_matrix(const RatFun& f, std::size_t dim);

// T_ij(x) = T^_ij(x) / N(x) as rational matrices.
std::array<std::array<RatMatrix, 2>, 2> rational_monodromy(const MonodromyPencil& mp);

struct BerezinianResult {
  std::array<DiffOp, 4> forms;  // the four expressions of the Berezinian
  bool forms_agree = false;
  bool tau_free = false;        // only the tau^0 coefficient survives
  bool scalar = false;          // tau^0 coefficient is a multiple of the identity
  std::optional<RatFun> value;
  bool central = false;         // Laurent coefficients commute with every T^_ij coefficient
};

// Ber(Z^Q), Z^Q = T^t(x) Q tau, with K11 = q1 T11 tau, K12 = q2 T21 tau,
// K21 = q1 T12 tau, K22 = q2 T22 tau.
BerezinianResult berezinian(const MonodromyPencil& mp, const Scalar& q1, const Scalar& q2,
                            std::size_t central_order = 4);

// (q1/q2) phi/psi.
RatFun expected_berezinian(const ModuleSpec& spec);

// D^Q = Ber(1 - Z^Q) through tau^M from the displayed product form.
DiffOp difference_operator(const MonodromyPencil& mp, const Scalar& q1, const Scalar& q2, int max_degree);

struct DqExpansionResult {
  bool transfer_coefficients = false;  // [tau^m] D^Q = (-1)^m T_m for m <= M
  bool inverse_coefficients = false;   // [tau^m] (D^Q)^{-1} = H_m (blocks route) for m <= min(M, 3)
  std::optional<int> witness;
};

DqExpansionResult dq_expansion_check(const MonodromyPencil& mp, const Scalar& q1, const Scalar& q2, int max_degree);

// H_m from the inverse of sum_m (-1)^m T_m tau^m, with common denominator prod_{i<m} N(x-i).
std::vector<OpRat> inverse_series_h(const MonodromyPencil& mp, const Scalar& q1, const Scalar& q2, std::size_t max_m);

struct TransferRelationResult {
  bool antisymmetric = false;  // T_m prod (1 - Ber(x-i)) = prod T(x-i+1)
  bool symmetric = false;      // H_m prod (Ber(x-i) - 1) = prod T(x-i+1) prod Ber(x-i)
  bool h_routes_agree = true;  // inverse series vs blocks route, m <= 3
};

TransferRelationResult transfer_relation_check(const MonodromyPencil& mp, const Scalar& q1, const Scalar& q2,
                                               std::size_t m, const RatFun& ber);

// [tau^m] of D_y = (1 - q1 zeta1 y[1]/y tau)(1 - q2 zeta2 y[1]/y tau)^{-1}, m >= 1, closed form.
RatFun dy_coefficient(const CharPair& cp, const Scalar& q1, const Scalar& q2, const Poly& y, std::size_t m);
// The same coefficients from the difference-operator product.
DiffOp dy_operator(const CharPair& cp, const Scalar& q1, const Scalar& q2, const Poly& y, int max_degree);

struct OperActionResult {
  bool pass = false;
  bool closed_form_matches_series = false;
  std::optional<std::size_t> failing_order;
};

// (-1)^m T_m B^ = [tau^m] D_y B^ for m = 1..M; y with simple roots.
OperActionResult oper_action_check(const ModuleSpec& spec, const Divisor& y, std::size_t max_m);

struct UniversalOperResult {
  bool first_form = false;
  bool second_form = false;
  std::optional<int> witness;
};

// Both displayed forms of D^Q in terms of T_Q and the scalar Ber, through tau^M.
// Throws when Ber = 1.
UniversalOperResult universal_oper_check(const MonodromyPencil& mp, const Scalar& q1, const Scalar& q2,
                                         const RatFun& ber, int max_degree);

// Ber T_Q / (Ber - 1) and T_Q / (Ber - 1) act on B^ by q1 zeta1 y[1]/y and q2 zeta2 y[1]/y.
bool oper_factor_action(const ModuleSpec& spec, const Divisor& y, const RatFun& ber);

}  // namespace gl11
