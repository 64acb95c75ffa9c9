#include "gl11/shapoform.hpp"

namespace gl11 {

namespace {

const SuperSpace& leg_space() {
  static const SuperSpace s({Parity::even, Parity::odd});
  return s;
}

SuperOperator unit(int a, int b) {
  QMatrix e(2, 2);
  e(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = 1;
  return {e, index_parity(a) + index_parity(b)};
}

struct RTerm {
  int a, b, c, d;  // E_ab (x) E_cd
  Scalar coeff;
};

std::vector<RTerm> r_terms(const Weight& li, const Weight& lj, const Scalar& x) {
  const Scalar den = lj.l1 + li.l2 + x;
  if (is_zero(den)) throw Error("R-matrix undefined");
  return {
      {0, 0, 0, 0, Scalar(1)},
      {1, 1, 1, 1, Scalar(-(li.l1 + lj.l2 - x) / den)},
      {0, 0, 1, 1, Scalar((lj.l1 - li.l1 + x) / den)},
      {1, 1, 0, 0, Scalar((li.l2 - lj.l2 + x) / den)},
      {0, 1, 1, 0, Scalar(-(li.l1 + li.l2) / den)},
      {1, 0, 0, 1, Scalar((lj.l1 + lj.l2) / den)},
  };
}

// Value of p at a + c eps as a polynomial in eps.
Poly compose_linear(const Poly& p, const Scalar& a, const Scalar& c) {
  const Poly lin({a, c});
  Poly r;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    r *= lin;
    r += Poly::constant(p.coeffs()[i]);
  }
  return r;
}

// prod_i f(t_i) / y'(t_i), via t_i -> t_i + (i+1) eps when roots repeat.
std::optional<Scalar> root_product(const Poly& f, const std::vector<Scalar>& t) {
  RatFun acc(1);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Scalar ci(static_cast<long>(i + 1));
    Poly den = Poly::constant(1);
    for (std::size_t j = 0; j < t.size(); ++j)
      if (j != i) den *= Poly({Scalar(t[i] - t[j]), Scalar(ci - static_cast<long>(j + 1))});
    acc *= RatFun(compose_linear(f, t[i], ci), den);
  }
  try {
    return eps_limit(acc);
  } catch (const EpsPoleError&) {
    return std::nullopt;
  }
}

Scalar power(const Scalar& q, std::size_t e) {
  Scalar r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace

QMatrix r_matrix(const Weight& li, const Weight& lj, const Scalar& x) {
  QMatrix r(4, 4);
  for (const auto& t : r_terms(li, lj, x)) {
    const auto e1 = unit(t.a, t.b), e2 = unit(t.c, t.d);
    r += super_kron(e1.mat, leg_space(), e2.mat, e2.parity) * t.coeff;
  }
  return r;
}

bool verify_r_intertwining(const Weight& li, const Scalar& bi, const Weight& lj, const Scalar& bj) {
  const QMatrix r = r_matrix(li, lj, bi - bj);
  const auto mij = coproduct(evaluation_monodromy(li, bi), evaluation_monodromy(lj, bj));
  const auto mji = coproduct(evaluation_monodromy(lj, bj), evaluation_monodromy(li, bi));
  const QMatrix p = graded_flip(mij.space, 0, 1);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const auto& x = mij.t[a][b];
      const auto& y = mji.t[a][b];
      const int deg = std::max(x.degree(), y.degree());
      for (int d = 0; d <= deg; ++d) {
        const QMatrix op = p * y.coeff(static_cast<std::size_t>(d)) * p;
        if (!(op * r == r * x.coeff(static_cast<std::size_t>(d)))) return false;
      }
    }
  return true;
}

QMatrix shapovalov_tensor(const ModuleSpec& spec) {
  const SuperSpace space = tensor_monodromy(spec).space;
  QMatrix g(space.dim(), space.dim());
  for (std::size_t i = 0; i < space.dim(); ++i) {
    const auto idx = space.multi_index(i);
    Scalar v = 1;
    long odd = 0;
    for (std::size_t s = 0; s < idx.size(); ++s)
      if (idx[s] == 1) {
        v *= -(spec.weights[s].l1 + spec.weights[s].l2);
        ++odd;
      }
    if ((odd * (odd - 1) / 2) % 2 == 1) v = -v;
    g(i, i) = v;
  }
  return g;
}

QMatrix r_product(const ModuleSpec& spec) {
  const std::size_t k = spec.k();
  std::vector<SuperSpace> spaces(k, leg_space());
  const std::size_t dim = std::size_t{1} << k;
  QMatrix total = QMatrix::identity(dim);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      QMatrix rij(dim, dim);
      for (const auto& t : r_terms(spec.weights[i], spec.weights[j], spec.points[i] - spec.points[j])) {
        std::vector<SuperOperator> legs(k, SuperOperator{QMatrix::identity(2), Parity::even});
        legs[i] = unit(t.a, t.b);
        legs[j] = unit(t.c, t.d);
        rij += super_tensor(legs, spaces) * t.coeff;
      }
      total = total * rij;
    }
  return total;
}

QMatrix form_matrix(const ModuleSpec& spec) { return shapovalov_tensor(spec) * r_product(spec); }

bool verify_iota(const MonodromyPencil& m, const QMatrix& gram, std::size_t order) {
  std::array<std::array<std::vector<QMatrix>, 2>, 2> lc;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) lc[i][j] = laurent_expand(m.t[i][j], m.normalizer, order);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Parity p = entry_parity(i, j);
      const int iota_sign = sign(index_parity(i) * index_parity(j) + index_parity(i));
      for (std::size_t r = 0; r <= order; ++r) {
        const QMatrix& x = lc[i][j][r];
        QMatrix rhs = gram * lc[j][i][r] * Scalar(iota_sign);
        for (std::size_t a = 0; a < rhs.rows(); ++a)
          if (sign(p * m.space.parity(a)) < 0)
            for (std::size_t b = 0; b < rhs.cols(); ++b) rhs(a, b) = -rhs(a, b);
        if (!(x.transpose() * gram == rhs)) return false;
      }
    }
  return true;
}

bool verify_self_adjoint(const OpPoly& tq, const QMatrix& gram) {
  for (const auto& c : tq.coeffs())
    if (!(gram * c == c.transpose() * gram)) return false;
  return true;
}

Scalar bilinear(const QMatrix& gram, const QVec& a, const QVec& b) {
  const QVec gb = gram * b;
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(a[i])) s += a[i] * gb[i];
  return s;
}

Poly wronskian(const Poly& f, const Poly& g) { return f * g.derivative() - f.derivative() * g; }

NormRow norm_check(const ModuleSpec& spec, const MonodromyPencil& m, const QMatrix& gram, const Divisor& y) {
  NormRow row;
  row.divisor = y;
  row.repeated = !y.simple();
  const auto t = y.root_list();
  const std::size_t l = t.size();
  const BetheVector b = bethe_vector(m, t);
  row.lhs = bilinear(gram, b.vec, b.vec);

  const CharPair cp = char_pair(spec);
  row.wronskian_product = root_product(wronskian(cp.phi, cp.psi), t);
  const auto gamma_product = root_product(wronskian(cp.gamma, cp.psi), t);
  if (row.wronskian_product) {
    row.rhs_q_prefactor = power(spec.q2 / spec.q1, l) * *row.wronskian_product;
    row.rhs_resolved = *row.wronskian_product * Scalar(l % 2 == 0 ? 1 : -1);
    row.matches_q_prefactor = *row.rhs_q_prefactor == row.lhs;
    row.matches_resolved = *row.rhs_resolved == row.lhs;
  }
  if (gamma_product) row.rhs_gamma_form = power(spec.q2, l) / power(spec.q1, 2 * l) * *gamma_product;
  return row;
}

NormRow norm_check(const ModuleSpec& spec, const Divisor& y) {
  return norm_check(spec, tensor_monodromy(spec), form_matrix(spec), y);
}

Scalar cross_pairing(const MonodromyPencil& m, const QMatrix& gram, const Divisor& y1, const Divisor& y2) {
  const auto t1 = y1.root_list(), t2 = y2.root_list();
  return bilinear(gram, bethe_vector(m, t1).vec, bethe_vector(m, t2).vec);
}

bool orthogonality_check(const ModuleSpec& spec, const Divisor& y1, const Divisor& y2) {
  return is_zero(cross_pairing(tensor_monodromy(spec), form_matrix(spec), y1, y2));
}

}  // namespace gl11
