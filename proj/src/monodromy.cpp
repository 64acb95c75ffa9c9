#include "gl11/monodromy.hpp"

#include <algorithm>

namespace gl11 {

namespace {

OpPoly kron_pencil(const OpPoly& a, const SuperSpace& sa, const OpPoly& b, Parity pb) {
  const std::size_t dim = a.dim() * b.dim();
  if (a.is_zero() || b.is_zero()) return OpPoly(dim);
  std::vector<QMatrix> c(a.coeffs().size() + b.coeffs().size() - 1, QMatrix(dim, dim));
  for (std::size_t p = 0; p < a.coeffs().size(); ++p)
    for (std::size_t q = 0; q < b.coeffs().size(); ++q)
      c[p + q] += super_kron(a.coeffs()[p], sa, b.coeffs()[q], pb);
  return OpPoly(std::move(c), dim);
}

QMatrix block(const QMatrix& big, std::size_t bi, std::size_t bj, std::size_t d) {
  QMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = big(bi * d + i, bj * d + j);
  return m;
}

}  // namespace

Scalar ModuleSpec::n() const {
  Scalar s = 0;
  for (const auto& w : weights) s += w.l1 + w.l2;
  return s;
}

void ModuleSpec::validate() const {
  if (weights.empty()) throw Error("spec has no tensor factors");
  if (weights.size() != points.size()) throw Error("weights and points have different lengths");
  for (const auto& w : weights) {
    if (!w.polynomial()) throw Error("weight (" + to_string(w.l1) + "," + to_string(w.l2) + ") is not polynomial");
    if (!w.nondegenerate()) throw Error("weight (" + to_string(w.l1) + "," + to_string(w.l2) + ") is degenerate");
  }
  if (is_zero(q1) || is_zero(q2)) throw Error("twist entries must be nonzero");
  if (q1 == q2 && is_zero(n())) throw Error("exceptional case q1 = q2 with |lambda| = 0");
}

MonodromyPencil evaluation_monodromy(const Weight& w, const Scalar& b) {
  if (!w.nondegenerate() && !(is_zero(w.l1) && is_zero(w.l2)))
    throw Error("degenerate weight (" + to_string(w.l1) + "," + to_string(w.l2) + ") has no evaluation pencil");
  GlModule g = gl_irrep(w);
  const std::size_t d = g.space.dim();
  MonodromyPencil m;
  m.space = g.space;
  m.normalizer = Poly::linear(b);
  // T^_ij = delta_ij (x - b) + (-1)^{|j|} e_ji.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      QMatrix c0 = g.e[j][i] * Scalar(sign(index_parity(j)));
      std::vector<QMatrix> c{c0};
      if (i == j) {
        for (std::size_t r = 0; r < d; ++r) c[0](r, r) -= b;
        c.push_back(QMatrix::identity(d));
      }
      m.t[i][j] = OpPoly(std::move(c), d);
    }
  return m;
}

MonodromyPencil coproduct(const MonodromyPencil& a, const MonodromyPencil& b) {
  MonodromyPencil m;
  m.space = SuperSpace::tensor(a.space, b.space);
  m.normalizer = a.normalizer * b.normalizer;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      OpPoly acc(m.space.dim());
      for (int r = 0; r < 2; ++r) acc += kron_pencil(a.t[r][j], a.space, b.t[i][r], entry_parity(i, r));
      m.t[i][j] = std::move(acc);
    }
  return m;
}

MonodromyPencil tensor_monodromy(const ModuleSpec& spec) {
  spec.validate();
  MonodromyPencil m = evaluation_monodromy(spec.weights[0], spec.points[0]);
  for (std::size_t s = 1; s < spec.k(); ++s) m = coproduct(m, evaluation_monodromy(spec.weights[s], spec.points[s]));
  return m;
}

MonodromyPencil lax_monodromy(std::span<const Scalar> points) {
  const std::size_t n = points.size();
  if (n == 0) throw Error("lax model needs at least one site");
  const SuperSpace big = SuperSpace::vector_power(n + 1);
  const std::size_t dbig = big.dim(), d = dbig / 2;
  OpPoly l = OpPoly::constant(QMatrix::identity(dbig));
  for (std::size_t s = n; s >= 1; --s) {
    QMatrix c0 = graded_flip(big, 0, s);
    for (std::size_t i = 0; i < dbig; ++i) c0(i, i) -= points[s - 1];
    l = l * OpPoly({c0, QMatrix::identity(dbig)}, dbig);
  }
  MonodromyPencil m;
  m.space = SuperSpace::vector_power(n);
  m.normalizer = Poly::from_roots(std::vector<Scalar>(points.begin(), points.end()));
  // Block (i,j) of sum E_ij (x) L_ij carries the Koszul sign (-1)^{|L_ij||j|}.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Scalar sg = sign(entry_parity(i, j) * index_parity(j));
      std::vector<QMatrix> c;
      for (const auto& q : l.coeffs()) c.push_back(block(q, static_cast<std::size_t>(i), static_cast<std::size_t>(j), d) * sg);
      m.t[i][j] = OpPoly(std::move(c), d);
    }
  return m;
}

GlModule module_gl_action(const ModuleSpec& spec) {
  GlModule g = gl_irrep(spec.weights.at(0));
  for (std::size_t s = 1; s < spec.k(); ++s) g = gl_tensor(g, gl_irrep(spec.weights[s]));
  return g;
}

RttResult verify_rtt(const MonodromyPencil& m) {
  const std::size_t dim = m.dim();
  int top = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) top = std::max(top, m.t[i][j].degree());
  const std::size_t nd = static_cast<std::size_t>(top) + 1;
  const QMatrix zero(dim, dim);
  auto coeff = [&](int e, std::size_t p) -> const QMatrix& {
    const auto& c = m.t[e / 2][e % 2].coeffs();
    return p < c.size() ? c[p] : zero;
  };
  // prod[e][f][p][q] = (T_e)_p (T_f)_q for flat entry indices e, f.
  std::vector<std::vector<std::vector<QMatrix>>> prod(16);
  for (int e = 0; e < 4; ++e)
    for (int f = 0; f < 4; ++f) {
      auto& pf = prod[static_cast<std::size_t>(e * 4 + f)];
      pf.assign(nd, std::vector<QMatrix>(nd));
      for (std::size_t p = 0; p < nd; ++p)
        for (std::size_t q = 0; q < nd; ++q) pf[p][q] = coeff(e, p) * coeff(f, q);
    }
  auto P = [&](int e, int f, long p, long q) -> const QMatrix& {
    if (p < 0 || q < 0 || p >= static_cast<long>(nd) || q >= static_cast<long>(nd)) return zero;
    return prod[static_cast<std::size_t>(e * 4 + f)][static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
  };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
          const int ij = i * 2 + j, rs = r * 2 + s, rj = r * 2 + j, is = i * 2 + s;
          const Scalar comm_sign = sign(entry_parity(i, j) * entry_parity(r, s));
          const Parity pi = index_parity(i), pr = index_parity(r), ps = index_parity(s);
          const Scalar rhs_sign = sign(pi * pr + ps * pi + ps * pr);
          // C(p,q) = [T_ij,p , T_rs,q]
          auto C = [&](long p, long q) { return P(ij, rs, p, q) - P(rs, ij, q, p) * comm_sign; };
          for (long a = 0; a <= static_cast<long>(nd); ++a)
            for (long b = 0; b <= static_cast<long>(nd); ++b) {
              QMatrix lhs = C(a - 1, b) - C(a, b - 1);
              QMatrix rhs = (P(rj, is, b, a) - P(rj, is, a, b)) * rhs_sign;
              if (!(lhs == rhs)) {
                return {false, RttWitness{i + 1, j + 1, r + 1, s + 1, static_cast<std::size_t>(a), static_cast<std::size_t>(b)}};
              }
            }
        }
  return {};
}

bool verify_gl_covariance(const MonodromyPencil& m, const GlModule& g) {
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) {
      const Parity p = entry_parity(r, s);
      const QMatrix& e = g.e[r][s];
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const int deg = std::max({m.t[a][b].degree(), m.t[s][b].degree(), m.t[a][r].degree()});
          for (int d = 0; d <= deg; ++d) {
            const auto du = static_cast<std::size_t>(d);
            QMatrix tab = m.t[a][b].coeff(du);
            QMatrix lhs = e * tab * Scalar(sign(p * entry_parity(a, b))) - tab * e;
            if (a == r) lhs += m.t[s][b].coeff(du);
            if (b == s) lhs -= m.t[a][r].coeff(du) * Scalar(sign((index_parity(a) + index_parity(r)) * p));
            if (!lhs.is_zero()) return false;
          }
        }
    }
  return true;
}

OpPoly transfer_pencil(const MonodromyPencil& m, const Scalar& q1, const Scalar& q2) {
  return m.t[0][0] * q1 - m.t[1][1] * q2;
}

Lambda2Reduction reduce_lambda2(const ModuleSpec& spec) {
  Lambda2Reduction out{spec, RatFun(1)};
  Poly num = Poly::constant(1), den = Poly::constant(1);
  for (std::size_t s = 0; s < spec.k(); ++s) {
    const auto& w = spec.weights[s];
    out.reduced.weights[s] = Weight{w.l1 + w.l2, 0};
    out.reduced.points[s] = spec.points[s] + w.l2;
    num *= Poly::linear(spec.points[s]);
    den *= Poly::linear(spec.points[s] + w.l2);
  }
  out.xi = RatFun(num, den);
  return out;
}

Poly drinfeld_phi(const ModuleSpec& spec) {
  Poly p = Poly::constant(1);
  for (std::size_t s = 0; s < spec.k(); ++s) p *= Poly::linear(spec.points[s] - spec.weights[s].l1);
  return p;
}

Poly drinfeld_psi(const ModuleSpec& spec) {
  Poly p = Poly::constant(1);
  for (std::size_t s = 0; s < spec.k(); ++s) p *= Poly::linear(spec.points[s] + spec.weights[s].l2);
  return p;
}

Poly normalizer(const ModuleSpec& spec) { return Poly::from_roots(spec.points); }

ModuleFlags cyclicity_and_irreducibility(const ModuleSpec& spec) {
  ModuleFlags f;
  f.cyclic = true;
  for (std::size_t i = 0; i < spec.k(); ++i)
    for (std::size_t j = i + 1; j < spec.k(); ++j)
      if (spec.points[j] == spec.points[i] + spec.weights[i].l2 + spec.weights[j].l1) f.cyclic = false;
  f.irreducible = gcd(drinfeld_phi(spec), drinfeld_psi(spec)).degree() == 0;
  return f;
}

std::vector<Scalar> string_points(const ModuleSpec& spec) {
  std::vector<Scalar> a;
  for (std::size_t s = 0; s < spec.k(); ++s) {
    const auto& w = spec.weights[s];
    if (!is_zero(w.l2)) throw Error("string points need l2 = 0; apply reduce_lambda2 first");
    if (w.l1.get_den() != 1 || sgn(w.l1) < 0) throw Error("string points need integral l1");
    const long len = w.l1.get_num().get_si();
    for (long i = 0; i < len; ++i) a.push_back(spec.points[s] - i);
  }
  std::stable_sort(a.begin(), a.end(), [](const Scalar& x, const Scalar& y) { return x > y; });
  return a;
}

MonodromyPencil with_flipped_t21(MonodromyPencil m) {
  m.t[1][0] *= Scalar(-1);
  return m;
}

}  // namespace gl11
