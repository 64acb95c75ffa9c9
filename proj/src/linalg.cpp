#include "gl11/linalg.hpp"

#include "gl11/factor.hpp"

namespace gl11 {

namespace {

using SparseVec = SparseEchelon::SparseVec;

// a - f * b for index-sorted sparse vectors.
SparseVec axpy_sparse(const SparseVec& a, const Scalar& f, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, Scalar(-f * b[j].second));
      ++j;
    } else {
      Scalar v = a[i].second - f * b[j].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

QMatrix select_rows(const QMatrix& m, const std::vector<std::size_t>& rows) {
  QMatrix s(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s(i, j) = m(rows[i], j);
  return s;
}

// Rows of basis that form an invertible square block.
std::vector<std::size_t> independent_rows(const QMatrix& basis) {
  auto e = rref(basis.transpose());
  if (e.pivots.size() != basis.cols()) throw Error("basis columns are linearly dependent");
  return e.pivots;
}

QMatrix shifted_op(const QMatrix& op, const Scalar& c) {
  QMatrix m = op;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= c;
  return m;
}

QMatrix kernel_of_stack(const std::vector<QMatrix>& blocks, std::size_t dim) {
  if (blocks.empty()) return QMatrix::identity(dim);
  QMatrix stack = blocks.front();
  for (std::size_t i = 1; i < blocks.size(); ++i) stack = vstack(stack, blocks[i]);
  return nullspace(stack);
}

void spectrum_rec(std::span<const QMatrix> ops, std::size_t p, const QMatrix& space,
                  std::vector<Scalar>& prefix, JointSpectrum& out) {
  if (space.cols() == 0) return;
  if (p == ops.size()) {
    out.blocks.push_back({prefix, space});
    return;
  }
  QMatrix r = restrict_to(ops[p], space);
  auto fac = factor_over_rationals(characteristic_polynomial(r));
  for (const auto& f : fac.factors) {
    if (f.poly.degree() != 1) {
      out.split = false;
      continue;
    }
    Scalar c = -f.poly.coeff(0);
    QMatrix gen = nullspace(matrix_power(shifted_op(r, c), r.rows()));
    prefix.push_back(c);
    spectrum_rec(ops, p + 1, space * gen, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

bool SparseEchelon::insert(SparseVec v) {
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) {
      Scalar inv = 1 / v.front().second;
      for (auto& e : v) e.second *= inv;
      rows_.emplace(v.front().first, std::move(v));
      return true;
    }
    Scalar f = v.front().second;
    v = axpy_sparse(v, f, it->second);
  }
  return false;
}

SparseVec to_sparse(const QVec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) s.emplace_back(i, v[i]);
  return s;
}

QMatrix restrict_to(const QMatrix& op, const QMatrix& basis) {
  if (basis.cols() == 0) return QMatrix(0, 0);
  QMatrix image = op * basis;
  auto rows = independent_rows(basis);
  QMatrix r = inverse(select_rows(basis, rows)) * select_rows(image, rows);
  if (!(basis * r == image)) throw Error("subspace is not invariant under the operator");
  return r;
}

QVec coordinates(const QMatrix& basis, const QVec& v) {
  if (basis.cols() == 0) {
    if (!is_zero_vec(v)) throw Error("vector outside the span");
    return {};
  }
  auto rows = independent_rows(basis);
  QMatrix vm = QMatrix::from_columns({v}, v.size());
  QVec c = (inverse(select_rows(basis, rows)) * select_rows(vm, rows)).column(0);
  if (!(basis * c == v)) throw Error("vector outside the span");
  return c;
}

bool in_span(const QMatrix& basis, const QVec& v) {
  if (basis.cols() == 0) return is_zero_vec(v);
  QMatrix aug = hstack(basis, QMatrix::from_columns({v}, v.size()));
  return rank(aug) == rank(basis);
}

Poly characteristic_polynomial(const QMatrix& a) {
  // Faddeev-LeVerrier recursion; exact over Q.
  const std::size_t n = a.rows();
  std::vector<Scalar> c(n + 1, Scalar(0));
  c[n] = 1;
  QMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    QMatrix am = a * m;
    Scalar tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Scalar(static_cast<long>(k));
  }
  return Poly(std::move(c));
}

bool commutes(const QMatrix& a, const QMatrix& b) { return a * b == b * a; }

std::vector<JointEigenspace> joint_generalized_eigenspaces(std::span<const QMatrix> ops,
                                                           const std::vector<std::vector<Scalar>>& chars) {
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      if (!commutes(ops[i], ops[j])) throw Error("family not commutative");
  const std::size_t dim = ops.empty() ? 0 : ops.front().rows();
  std::vector<JointEigenspace> out;
  for (const auto& ch : chars) {
    if (ch.size() != ops.size()) throw Error("character length differs from family size");
    std::vector<QMatrix> lin, gen;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      QMatrix s = shifted_op(ops[i], ch[i]);
      gen.push_back(matrix_power(s, dim));
      lin.push_back(std::move(s));
    }
    out.push_back({kernel_of_stack(lin, dim), kernel_of_stack(gen, dim)});
  }
  return out;
}

JointSpectrum joint_spectrum(std::span<const QMatrix> ops) {
  JointSpectrum out;
  if (ops.empty()) return out;
  std::vector<Scalar> prefix;
  spectrum_rec(ops, 0, QMatrix::identity(ops.front().rows()), prefix, out);
  return out;
}

std::size_t commutant_dimension(std::span<const QMatrix> gens, std::size_t dim) {
  const std::size_t n2 = dim * dim;
  if (n2 == 0) return 0;
  QMatrix sys(gens.size() * n2, n2);
  std::size_t row = 0;
  for (const auto& g : gens) {
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b, ++row)
        for (std::size_t c = 0; c < dim; ++c) {
          sys(row, a * dim + c) += g(c, b);
          sys(row, c * dim + b) -= g(a, c);
        }
  }
  return n2 - rank(sys);
}

}  // namespace gl11
