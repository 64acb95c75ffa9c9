#include "gl11/fusion.hpp"

#include <algorithm>
#include <numeric>

#include "gl11/linalg.hpp"

namespace gl11 {

namespace {

Scalar power(const Scalar& q, std::size_t e) {
  Scalar r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= q;
  return r;
}

Scalar factorial(std::size_t m) {
  Scalar r = 1;
  for (std::size_t i = 2; i <= m; ++i) r *= static_cast<long>(i);
  return r;
}

// prod_{i<m} N(x - i)
Poly fused_denominator(const Poly& n, std::size_t m) {
  Poly d = Poly::constant(1);
  for (std::size_t i = 0; i < m; ++i) d *= n.shifted(static_cast<long>(i));
  return d;
}

OpPoly identity_pencil(std::size_t dim) { return OpPoly::constant(QMatrix::identity(dim)); }

RatMatrix ratfun_scaled(const OpPoly& p, const Poly& den) {
  RatMatrix m = to_ratfun_matrix(p);
  const RatFun inv(Poly::constant(1), den);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) m(i, j) *= inv;
  return m;
}

bool is_identity_multiple(const RatMatrix& m, RatFun& value) {
  value = m(0, 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == (i == j ? value : RatFun()))) return false;
  return true;
}

// Applies a numerator pencil to v; components are polynomials in x.
std::vector<Poly> apply_pencil(const OpPoly& p, const QVec& v) {
  std::vector<Poly> out(v.size());
  const auto cs = p.apply(v);
  for (std::size_t d = 0; d < cs.size(); ++d)
    for (std::size_t a = 0; a < v.size(); ++a)
      if (!is_zero(cs[d][a])) out[a] += Poly::monomial(cs[d][a], d);
  return out;
}

bool proportional(const std::vector<Poly>& lhs, const RatFun& lhs_scale, const RatFun& factor, const QVec& v) {
  // lhs / lhs_scale == factor * v, cross-multiplied
  for (std::size_t a = 0; a < v.size(); ++a) {
    const Poly l = lhs[a] * lhs_scale.den() * factor.den();
    const Poly r = factor.num() * lhs_scale.num() * v[a];
    if (!(l == r)) return false;
  }
  return true;
}

}  // namespace

OpRat operator*(const OpRat& a, const OpRat& b) { return {a.num * b.num, a.den * b.den}; }

OpRat operator+(const OpRat& a, const OpRat& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {b.den * a.num + a.den * b.num, a.den * b.den};
}

OpRat operator*(const RatFun& s, const OpRat& a) { return {s.num() * a.num, s.den() * a.den}; }

bool same(const OpRat& a, const OpRat& b) { return b.den * a.num == a.den * b.num; }

RatMatrix to_ratmatrix(const OpRat& a) { return ratfun_scaled(a.num, a.den); }

std::pair<QMatrix, QMatrix> symmetrizers(std::size_t m) {
  if (m == 0) throw Error("symmetrizers: m must be positive");
  const SuperSpace space = SuperSpace::vector_power(m);
  const std::size_t dim = space.dim();
  std::vector<QMatrix> flips;
  for (std::size_t a = 0; a + 1 < m; ++a) flips.push_back(graded_flip(space, a, a + 1));

  QMatrix anti(dim, dim), sym(dim, dim);
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // Bubble sort writes the permutation as a word in adjacent transpositions.
    std::vector<std::size_t> w = perm;
    QMatrix p = QMatrix::identity(dim);
    std::size_t swaps = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j + 1 < m - i; ++j)
        if (w[j] > w[j + 1]) {
          std::swap(w[j], w[j + 1]);
          p = p * flips[j];
          ++swaps;
        }
    sym += p;
    if (swaps % 2 == 0)
      anti += p;
    else
      anti -= p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  const Scalar inv = Scalar(1) / factorial(m);
  return {anti * inv, sym * inv};
}

OpRat fused_transfer_blocks(const MonodromyPencil& mp, const Scalar& q1, const Scalar& q2, std::size_t m,
                            bool symmetric) {
  if (m == 0) throw Error("higher transfer: m must be positive");
  const std::size_t dim = mp.dim();
  const SuperSpace aux = SuperSpace::vector_power(m);
  const std::size_t na = aux.dim();
  const auto [anti, sym] = symmetrizers(m);
  const QMatrix& s = symmetric ? sym : anti;
  const Scalar q[2] = {q1, q2};

  // Q^(a) T^(a)(x - a + 1) shifted pencils, per leg a.
  std::vector<std::array<std::array<OpPoly, 2>, 2>> legs(m);
  for (std::size_t a = 0; a < m; ++a)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) legs[a][i][j] = mp.t[i][j].shifted(static_cast<long>(a)) * q[i];

  OpPoly trace(dim);
  for (std::size_t col = 0; col < na; ++col) {
    // Column col of Y = F_1 ... F_m as blocks indexed by the aux row.
    std::vector<OpPoly> blocks(na, OpPoly(dim));
    blocks[col] = identity_pencil(dim);
    for (std::size_t a = m; a-- > 0;) {
      std::vector<OpPoly> next(na, OpPoly(dim));
      for (std::size_t jf = 0; jf < na; ++jf) {
        if (blocks[jf].is_zero()) continue;
        const auto mj = aux.multi_index(jf);
        const int j = static_cast<int>(mj[a]);
        Parity tail = index_parity(j);
        for (std::size_t t = a + 1; t < m; ++t) tail = tail + index_parity(static_cast<int>(mj[t]));
        for (int i = 0; i < 2; ++i) {
          if (legs[a][i][j].is_zero()) continue;
          auto mi = mj;
          mi[a] = static_cast<std::size_t>(i);
          OpPoly term = legs[a][i][j] * blocks[jf];
          if (sign(entry_parity(i, j) * tail) < 0) term *= Scalar(-1);
          next[aux.flat_index(mi)] += term;
        }
      }
      blocks = std::move(next);
    }
    OpPoly diag(dim);
    for (std::size_t r = 0; r < na; ++r)
      if (!is_zero(s(col, r)) && !blocks[r].is_zero()) diag += blocks[r] * s(col, r);
    if (aux.parity(col) == Parity::odd)
      trace -= diag;
    else
      trace += diag;
  }
  return {trace, fused_denominator(mp.normalizer, m)};
}

OpRat fused_transfer_expansion(const MonodromyPencil& mp, const Scalar& q1, const Scalar& q2, std::size_t m) {
  if (m == 0) throw Error("higher transfer: m must be positive");
  const Poly den = fused_denominator(mp.normalizer, m);
  if (m == 1) return {transfer_pencil(mp, q1, q2), den};
  auto t22 = [&](std::size_t i) { return mp.t[1][1].shifted(static_cast<long>(i)); };

  OpPoly head = transfer_pencil(mp, q1, q2) * Scalar(-1);
  for (std::size_t i = 1; i < m; ++i) head = head * t22(i);
  OpPoly tilde = head;
  for (std::size_t s = 1; s < m; ++s) {
    OpPoly term = mp.t[0][1] * q1;
    for (std::size_t i = 1; i < s; ++i) term = term * t22(i);
    term = term * mp.t[1][0].shifted(static_cast<long>(s));
    for (std::size_t j = s + 1; j < m; ++j) term = term * t22(j);
    tilde += term;
  }
  Scalar scale = power(q2, m - 1);
  if (m % 2 == 1) scale = -scale;
  return {tilde * scale, den};
}

RouteComparison compare_routes(const MonodromyPencil& mp, const Scalar& q1, const Scalar& q2, std::size_t m) {
  const OpRat a = fused_transfer_blocks(mp, q1, q2, m, false);
  const OpRat b = fused_transfer_expansion(mp, q1, q2, m);
  RouteComparison r;
  const int deg = std::max(a.num.degree(), b.num.degree());
  for (int d = 0; d <= deg; ++d)
    if (!(a.num.coeff(static_cast<std::size_t>(d)) == b.num.coeff(static_cast<std::size_t>(d)))) {
      r.witness_degree = static_cast<std::size_t>(d);
      return r;
    }
  r.agree = a.den == b.den;
  return r;
}

bool fused_commute(const OpRat& a, const OpRat& b) {
  for (const auto& x : a.num.coeffs())
    for (const auto& y : b.num.coeffs())
      if (!commutes(x, y)) return false;
  return true;
}

RatMatrix shifted(const RatMatrix& m, const Scalar& a) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r(i, j) = m(i, j).shifted(a);
  return r;
}

RatMatrix scalar_matrix(const RatFun& f, std::size_t dim) {
  RatMatrix r(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) r(i, i) = f;
  return r;
}

DiffOp DiffOp::monomial(RatMatrix c, int degree) {
  DiffOp d(c.rows());
  d.add_term(degree, c);
  return d;
}

DiffOp DiffOp::identity(std::size_t dim) { return monomial(RatMatrix::identity(dim), 0); }

RatMatrix DiffOp::coeff(int degree) const {
  auto it = c_.find(degree);
  return it == c_.end() ? RatMatrix(dim_, dim_) : it->second;
}

int DiffOp::lowest() const {
  if (c_.empty()) throw Error("difference operator is zero");
  return c_.begin()->first;
}

int DiffOp::highest() const {
  if (c_.empty()) throw Error("difference operator is zero");
  return c_.rbegin()->first;
}

DiffOp DiffOp::truncated(int max_degree) const {
  DiffOp r(dim_);
  for (const auto& [d, m] : c_)
    if (d <= max_degree) r.c_.emplace(d, m);
  return r;
}

void DiffOp::add_term(int degree, const RatMatrix& m) {
  if (m.is_zero()) return;
  auto it = c_.find(degree);
  if (it == c_.end()) {
    c_.emplace(degree, m);
    return;
  }
  it->second += m;
  if (it->second.is_zero()) c_.erase(it);
}

DiffOp DiffOp::monomial_inverse() const {
  if (c_.size() != 1) throw Error("difference operator is not a monomial");
  const auto& [a, c] = *c_.begin();
  return monomial(shifted(inverse(c), Scalar(-a)), -a);
}

DiffOp DiffOp::series_inverse(int max_degree) const {
  const int a = lowest();
  const DiffOp lead_inv = monomial(coeff(a), a).monomial_inverse();
  // K = L (1 + Y), Y of positive degree.
  const DiffOp y = lead_inv * (*this - monomial(coeff(a), a));
  const int budget = max_degree + a;
  DiffOp sum = identity(dim_), term = identity(dim_);
  const DiffOp neg_y = DiffOp(dim_) - y;
  for (int j = 1; j <= budget; ++j) {
    term = (term * neg_y).truncated(budget);
    if (term.is_zero()) break;
    sum = sum + term;
  }
  return (sum.truncated(budget) * lead_inv).truncated(max_degree);
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  DiffOp r = a;
  for (const auto& [d, m] : b.c_) r.add_term(d, m);
  return r;
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) {
  DiffOp r = a;
  for (const auto& [d, m] : b.c_) r.add_term(d, -m);
  return r;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  if (a.dim_ != b.dim_) throw Error("difference operator: dimension mismatch");
  DiffOp r(a.dim_);
  for (const auto& [da, ma] : a.c_)
    for (const auto& [db, mb] : b.c_) r.add_term(da + db, ma * shifted(mb, Scalar(da)));
  return r;
}

std::array<std::array<RatMatrix, 2>, 2> rational_monodromy(const MonodromyPencil& mp) {
  std::array<std::array<RatMatrix, 2>, 2> t;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) t[i][j] = ratfun_scaled(mp.t[i][j], mp.normalizer);
  return t;
}

BerezinianResult berezinian(const MonodromyPencil& mp, const Scalar& q1, const Scalar& q2,
                            std::size_t central_order) {
  const auto t = rational_monodromy(mp);
  const DiffOp k11 = DiffOp::monomial(t[0][0] * RatFun(q1), 1);
  const DiffOp k12 = DiffOp::monomial(t[1][0] * RatFun(q2), 1);
  const DiffOp k21 = DiffOp::monomial(t[0][1] * RatFun(q1), 1);
  const DiffOp k22 = DiffOp::monomial(t[1][1] * RatFun(q2), 1);
  const DiffOp k11i = k11.monomial_inverse(), k22i = k22.monomial_inverse();

  BerezinianResult r;
  r.forms[0] = k11 * (k22 - k21 * k11i * k12).monomial_inverse();
  r.forms[1] = (k22 + k12 * k11i * k21).monomial_inverse() * k11;
  r.forms[2] = k22i * (k11 - k12 * k22i * k21);
  r.forms[3] = (k11 + k21 * k22i * k12) * k22i;
  r.forms_agree = std::all_of(r.forms.begin() + 1, r.forms.end(), [&](const DiffOp& f) { return f == r.forms[0]; });

  const DiffOp& ber = r.forms[0];
  r.tau_free = ber.terms().size() == 1 && ber.terms().begin()->first == 0;
  if (!r.tau_free) return r;
  const RatMatrix& c = ber.terms().begin()->second;
  RatFun v;
  r.scalar = is_identity_multiple(c, v);
  if (r.scalar) r.value = v;

  // Laurent coefficients of the tau^0 matrix against every T^_ij coefficient.
  const std::size_t dim = mp.dim();
  std::vector<QMatrix> lc(central_order + 1, QMatrix(dim, dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if (c(i, j).is_zero()) continue;
      const auto e = laurent_expand(c(i, j), central_order);
      for (std::size_t o = 0; o <= central_order; ++o) lc[o](i, j) = e[o];
    }
  r.central = true;
  for (const auto& b : lc)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (const auto& tc : mp.t[i][j].coeffs())
          if (!commutes(b, tc)) r.central = false;
  return r;
}

RatFun expected_berezinian(const ModuleSpec& spec) {
  return RatFun(drinfeld_phi(spec) * (spec.q1 / spec.q2), drinfeld_psi(spec));
}

DiffOp difference_operator(const MonodromyPencil& mp, const Scalar& q1, const Scalar& q2, int max_degree) {
  const auto t = rational_monodromy(mp);
  const std::size_t dim = mp.dim();
  const DiffOp one = DiffOp::identity(dim);
  const DiffOp k11 = one - DiffOp::monomial(t[0][0] * RatFun(q1), 1);
  const DiffOp k12 = DiffOp::monomial(t[1][0] * RatFun(-q2), 1);
  const DiffOp k21 = DiffOp::monomial(t[0][1] * RatFun(-q1), 1);
  const DiffOp k22 = one - DiffOp::monomial(t[1][1] * RatFun(q2), 1);
  const DiffOp k22i = k22.series_inverse(max_degree);
  return ((k11 + (k21 * k22i * k12).truncated(max_degree)) * k22i).truncated(max_degree);
}

std::vector<OpRat> inverse_series_h(const MonodromyPencil& mp, const Scalar& q1, const Scalar& q2,
                                    std::size_t max_m) {
  const std::size_t dim = mp.dim();
  std::vector<OpRat> c(max_m + 1);
  for (std::size_t j = 1; j <= max_m; ++j) {
    c[j] = fused_transfer_expansion(mp, q1, q2, j);
    if (j % 2 == 1) c[j].num *= Scalar(-1);
  }
  std::vector<OpRat> h(max_m + 1);
  h[0] = {identity_pencil(dim), Poly::constant(1)};
  for (std::size_t m = 1; m <= max_m; ++m) {
    OpRat acc{OpPoly(dim), fused_denominator(mp.normalizer, m)};
    for (std::size_t j = 1; j <= m; ++j) {
      const OpRat term = c[j] * h[m - j].shifted(static_cast<long>(j));
      acc = acc + term;
    }
    acc.num *= Scalar(-1);
    h[m] = acc;
  }
  return h;
}

DqExpansionResult dq_expansion_check(const MonodromyPencil& mp, const Scalar& q1, const Scalar& q2,
                                     int max_degree) {
  DqExpansionResult r;
  const std::size_t dim = mp.dim();
  const DiffOp dq = difference_operator(mp, q1, q2, max_degree);
  r.transfer_coefficients = dq.coeff(0) == RatMatrix::identity(dim);
  for (int m = 1; m <= max_degree && r.transfer_coefficients; ++m) {
    RatMatrix expected = to_ratmatrix(fused_transfer_expansion(mp, q1, q2, static_cast<std::size_t>(m)));
    if (m % 2 == 1) expected = -expected;
    if (!(dq.coeff(m) == expected)) {
      r.transfer_coefficients = false;
      r.witness = m;
    }
  }
  const DiffOp inv = dq.series_inverse(max_degree);
  r.inverse_coefficients = inv.coeff(0) == RatMatrix::identity(dim);
  for (int m = 1; m <= std::min(max_degree, 3) && r.inverse_coefficients; ++m) {
    if (!(inv.coeff(m) == to_ratmatrix(fused_transfer_blocks(mp, q1, q2, static_cast<std::size_t>(m), true)))) {
      r.inverse_coefficients = false;
      if (!r.witness) r.witness = m;
    }
  }
  return r;
}

TransferRelationResult transfer_relation_check(const MonodromyPencil& mp, const Scalar& q1, const Scalar& q2,
                                               std::size_t m, const RatFun& ber) {
  if (m == 0) throw Error("transfer relation: m must be positive");
  TransferRelationResult r;
  const std::size_t dim = mp.dim();
  const OpRat tq{transfer_pencil(mp, q1, q2), mp.normalizer};
  OpRat rhs{identity_pencil(dim), Poly::constant(1)};
  for (std::size_t i = 1; i <= m; ++i) rhs = rhs * tq.shifted(static_cast<long>(i - 1));

  RatFun one_minus = 1, minus_one = 1, ber_prod = 1;
  for (std::size_t i = 1; i < m; ++i) {
    const RatFun b = ber.shifted(static_cast<long>(i));
    one_minus *= RatFun(1) - b;
    minus_one *= b - RatFun(1);
    ber_prod *= b;
  }
  r.antisymmetric = same(one_minus * fused_transfer_expansion(mp, q1, q2, m), rhs);

  const OpRat h = inverse_series_h(mp, q1, q2, m)[m];
  if (m <= 3) r.h_routes_agree = same(h, fused_transfer_blocks(mp, q1, q2, m, true));
  r.symmetric = same(minus_one * h, ber_prod * rhs);
  return r;
}

RatFun dy_coefficient(const CharPair& cp, const Scalar& q1, const Scalar& q2, const Poly& y, std::size_t m) {
  if (m == 0) return 1;
  RatFun c = (cp.zeta1 * RatFun(q1) - cp.zeta2 * RatFun(q2)) * RatFun(y.shifted(static_cast<long>(m)), y);
  c *= RatFun(-power(q2, m - 1));
  for (std::size_t i = 1; i < m; ++i) c *= cp.zeta2.shifted(static_cast<long>(i));
  return c;
}

DiffOp dy_operator(const CharPair& cp, const Scalar& q1, const Scalar& q2, const Poly& y, int max_degree) {
  const RatFun ratio(y.shifted(1), y);
  const DiffOp one = DiffOp::identity(1);
  const DiffOp left = one - DiffOp::monomial(scalar_matrix(cp.zeta1 * ratio * RatFun(q1), 1), 1);
  const DiffOp right = one - DiffOp::monomial(scalar_matrix(cp.zeta2 * ratio * RatFun(q2), 1), 1);
  return (left * right.series_inverse(max_degree)).truncated(max_degree);
}

OperActionResult oper_action_check(const ModuleSpec& spec, const Divisor& y, std::size_t max_m) {
  if (!y.simple()) throw Error("oper action requires simple roots");
  OperActionResult r;
  const MonodromyPencil mp = tensor_monodromy(spec);
  const CharPair cp = char_pair(spec);
  const auto t = y.root_list();
  const BetheVector b = bethe_vector(mp, t);

  const DiffOp dy = dy_operator(cp, spec.q1, spec.q2, y.y, static_cast<int>(max_m));
  r.closed_form_matches_series = true;
  for (std::size_t m = 1; m <= max_m; ++m)
    if (!(dy.coeff(static_cast<int>(m))(0, 0) == dy_coefficient(cp, spec.q1, spec.q2, y.y, m)))
      r.closed_form_matches_series = false;

  r.pass = !b.is_zero();
  for (std::size_t m = 1; m <= max_m && r.pass; ++m) {
    const OpRat tm = fused_transfer_expansion(mp, spec.q1, spec.q2, m);
    RatFun scale(Poly::constant(m % 2 == 0 ? 1 : -1), tm.den);
    if (!proportional(apply_pencil(tm.num, b.vec), scale.inverse(), dy_coefficient(cp, spec.q1, spec.q2, y.y, m),
                      b.vec)) {
      r.pass = false;
      r.failing_order = m;
    }
  }
  r.pass = r.pass && r.closed_form_matches_series;
  return r;
}

UniversalOperResult universal_oper_check(const MonodromyPencil& mp, const Scalar& q1, const Scalar& q2,
                                         const RatFun& ber, int max_degree) {
  if (ber == RatFun(1)) throw Error("universal oper requires Ber != 1");
  UniversalOperResult r;
  const std::size_t dim = mp.dim();
  const DiffOp one = DiffOp::identity(dim);
  const RatMatrix tq = ratfun_scaled(transfer_pencil(mp, q1, q2), mp.normalizer);
  const RatFun inv_bm1 = (ber - RatFun(1)).inverse();

  const DiffOp c1 = DiffOp::monomial(tq * (ber * inv_bm1), 1);
  const DiffOp c2 = DiffOp::monomial(tq * inv_bm1, 1);
  const DiffOp form1 = ((one - c1) * (one - c2).series_inverse(max_degree)).truncated(max_degree);

  const RatFun u = RatFun(1) - ber.shifted(-1);
  const DiffOp left = DiffOp::monomial(scalar_matrix(u, dim), 0) + DiffOp::monomial(tq * ber, 1);
  const DiffOp right = DiffOp::monomial(scalar_matrix(u, dim), 0) + DiffOp::monomial(tq, 1);
  const DiffOp form2 = (left * right.series_inverse(max_degree)).truncated(max_degree);

  DiffOp expected = one;
  for (int m = 1; m <= max_degree; ++m) {
    RatMatrix c = to_ratmatrix(fused_transfer_expansion(mp, q1, q2, static_cast<std::size_t>(m)));
    if (m % 2 == 1) c = -c;
    expected = expected + DiffOp::monomial(c, m);
  }
  r.first_form = form1 == expected;
  r.second_form = form2 == expected;
  if (!r.first_form || !r.second_form)
    for (int m = 0; m <= max_degree; ++m)
      if (!(form1.coeff(m) == expected.coeff(m)) || !(form2.coeff(m) == expected.coeff(m))) {
        r.witness = m;
        break;
      }
  return r;
}

bool oper_factor_action(const ModuleSpec& spec, const Divisor& y, const RatFun& ber) {
  const MonodromyPencil mp = tensor_monodromy(spec);
  const CharPair cp = char_pair(spec);
  const BetheVector b = bethe_vector(mp, y.root_list());
  if (b.is_zero()) return false;
  const auto tv = apply_pencil(transfer_pencil(mp, spec.q1, spec.q2), b.vec);
  const RatFun ratio(y.y.shifted(1), y.y);
  const RatFun inv_bm1 = (ber - RatFun(1)).inverse();
  const RatFun n(mp.normalizer);
  return proportional(tv, n * (ber * inv_bm1).inverse(), cp.zeta1 * ratio * RatFun(spec.q1), b.vec) &&
         proportional(tv, n * inv_bm1.inverse(), cp.zeta2 * ratio * RatFun(spec.q2), b.vec);
}

}  // namespace gl11
