#include "gl11/superlin.hpp"

#include <algorithm>

#include "gl11/linalg.hpp"

namespace gl11 {

bool Weight::polynomial() const {
  auto nonneg_int = [](const Scalar& s) { return s.get_den() == 1 && sgn(s) >= 0; };
  if (!nonneg_int(l1) || !nonneg_int(l2)) return false;
  return sgn(l1) > 0 || (is_zero(l1) && is_zero(l2));
}

SuperSpace::SuperSpace(std::vector<Parity> parities)
    : parities_(std::move(parities)), legs_{parities_.size()}, leg_parities_{parities_} {}

SuperSpace SuperSpace::tensor(const SuperSpace& a, const SuperSpace& b) {
  SuperSpace s;
  for (auto pa : a.parities_)
    for (auto pb : b.parities_) s.parities_.push_back(pa + pb);
  s.legs_ = a.legs_;
  s.legs_.insert(s.legs_.end(), b.legs_.begin(), b.legs_.end());
  s.leg_parities_ = a.leg_parities_;
  s.leg_parities_.insert(s.leg_parities_.end(), b.leg_parities_.begin(), b.leg_parities_.end());
  return s;
}

SuperSpace SuperSpace::vector_power(std::size_t n) {
  const SuperSpace c11({Parity::even, Parity::odd});
  SuperSpace s = c11;
  for (std::size_t i = 1; i < n; ++i) s = tensor(s, c11);
  if (n == 0) return SuperSpace({Parity::even});
  return s;
}

std::vector<std::size_t> SuperSpace::multi_index(std::size_t i) const {
  std::vector<std::size_t> m(legs_.size());
  for (std::size_t k = legs_.size(); k-- > 0;) {
    m[k] = i % legs_[k];
    i /= legs_[k];
  }
  return m;
}

std::size_t SuperSpace::flat_index(const std::vector<std::size_t>& multi) const {
  std::size_t i = 0;
  for (std::size_t k = 0; k < legs_.size(); ++k) i = i * legs_[k] + multi[k];
  return i;
}

std::string SuperSpace::label(std::size_t i) const {
  std::string s;
  for (auto d : multi_index(i)) s += static_cast<char>('1' + d);
  return s;
}

bool respects_parity(const QMatrix& m, const SuperSpace& space, Parity p) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j)) && (space.parity(i) + space.parity(j)) != p) return false;
  return true;
}

SuperOperator make_operator(QMatrix m, const SuperSpace& space, Parity p) {
  if (m.rows() != space.dim() || m.cols() != space.dim()) throw Error("operator shape differs from its space");
  if (!respects_parity(m, space, p)) throw Error("operator support contradicts its declared parity");
  return {std::move(m), p};
}

Parity infer_parity(const QMatrix& m, const SuperSpace& space) {
  if (respects_parity(m, space, Parity::even)) return Parity::even;
  if (respects_parity(m, space, Parity::odd)) return Parity::odd;
  throw Error("parity-inhomogeneous operator");
}

QMatrix super_tensor(std::span<const SuperOperator> legs, std::span<const SuperSpace> spaces) {
  if (legs.size() != spaces.size() || legs.empty()) throw Error("leg count does not match tensor factors");
  for (std::size_t s = 0; s < legs.size(); ++s)
    if (!respects_parity(legs[s].mat, spaces[s], legs[s].parity))
      throw Error("operator support contradicts its declared parity");
  QMatrix acc = legs[0].mat;
  SuperSpace space = spaces[0];
  for (std::size_t s = 1; s < legs.size(); ++s) {
    acc = super_kron(acc, space, legs[s].mat, legs[s].parity);
    space = SuperSpace::tensor(space, spaces[s]);
  }
  return acc;
}

QVec koszul_apply(std::span<const SuperOperator> legs, std::span<const SuperSpace> spaces, const QVec& v) {
  return super_tensor(legs, spaces) * v;
}

QMatrix supertranspose(const QMatrix& m, const SuperSpace& space) {
  QMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (is_zero(m(i, j))) continue;
      Parity pi = space.parity(i), pj = space.parity(j);
      t(j, i) = sign(pi * pj + pi) > 0 ? m(i, j) : Scalar(-m(i, j));
    }
  return t;
}

QMatrix graded_flip(const SuperSpace& space, std::size_t a, std::size_t b) {
  if (a >= b || b >= space.leg_dims().size()) throw Error("graded flip: bad legs");
  QMatrix p(space.dim(), space.dim());
  for (std::size_t i = 0; i < space.dim(); ++i) {
    auto mi = space.multi_index(i);
    Parity pa = space.leg_parity(a, mi[a]), pb = space.leg_parity(b, mi[b]);
    Parity between = Parity::even;
    for (std::size_t t = a + 1; t < b; ++t) between = between + space.leg_parity(t, mi[t]);
    Parity s = pa * pb + (pa + pb) * between;
    std::swap(mi[a], mi[b]);
    p(space.flat_index(mi), i) = sign(s);
  }
  return p;
}

GlModule gl_irrep(const Weight& w) {
  GlModule m;
  if (!w.nondegenerate()) {
    m.space = SuperSpace({Parity::even});
    for (auto& row : m.e)
      for (auto& x : row) x = QMatrix(1, 1);
    m.e[0][0](0, 0) = w.l1;
    m.e[1][1](0, 0) = w.l2;
    return m;
  }
  m.space = SuperSpace({Parity::even, Parity::odd});
  for (auto& row : m.e)
    for (auto& x : row) x = QMatrix(2, 2);
  m.e[0][0](0, 0) = w.l1;
  m.e[0][0](1, 1) = w.l1 - 1;
  m.e[1][1](0, 0) = w.l2;
  m.e[1][1](1, 1) = w.l2 + 1;
  m.e[1][0](1, 0) = 1;
  m.e[0][1](0, 1) = w.l1 + w.l2;
  return m;
}

GlModule gl_tensor(const GlModule& a, const GlModule& b) {
  GlModule m;
  m.space = SuperSpace::tensor(a.space, b.space);
  const QMatrix ia = QMatrix::identity(a.space.dim()), ib = QMatrix::identity(b.space.dim());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Parity p = index_parity(i) + index_parity(j);
      m.e[i][j] = super_kron(a.e[i][j], a.space, ib, Parity::even) + super_kron(ia, a.space, b.e[i][j], p);
    }
  return m;
}

QMatrix weight_space(const GlModule& m, const Weight& w) {
  QMatrix a = m.e[0][0], b = m.e[1][1];
  for (std::size_t i = 0; i < a.rows(); ++i) {
    a(i, i) -= w.l1;
    b(i, i) -= w.l2;
  }
  return nullspace(vstack(a, b));
}

QMatrix singular_subspace(const GlModule& m, const Weight& w) {
  QMatrix a = m.e[0][0], b = m.e[1][1];
  for (std::size_t i = 0; i < a.rows(); ++i) {
    a(i, i) -= w.l1;
    b(i, i) -= w.l2;
  }
  return nullspace(vstack(vstack(a, b), m.e[0][1]));
}

std::vector<WeightSpace> weight_spaces(const GlModule& m) {
  const std::array<QMatrix, 2> cartan{m.e[0][0], m.e[1][1]};
  auto spec = joint_spectrum(cartan);
  std::vector<WeightSpace> out;
  std::size_t total = 0;
  for (const auto& blk : spec.blocks) {
    Weight w{blk.character[0], blk.character[1]};
    QMatrix ws = weight_space(m, w);
    if (ws.cols() != blk.generalized.cols()) throw Error("Cartan action is not diagonalizable");
    total += ws.cols();
    out.push_back({w, std::move(ws)});
  }
  if (!spec.split || total != m.space.dim()) throw Error("Cartan action is not diagonalizable over Q");
  std::sort(out.begin(), out.end(), [](const WeightSpace& x, const WeightSpace& y) {
    if (x.weight.l1 != y.weight.l1) return x.weight.l1 > y.weight.l1;
    return x.weight.l2 < y.weight.l2;
  });
  return out;
}

}  // namespace gl11
