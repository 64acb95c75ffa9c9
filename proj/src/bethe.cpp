#include "gl11/bethe.hpp"

#include <algorithm>

#include "gl11/factor.hpp"
#include "gl11/linalg.hpp"

namespace gl11 {

namespace {

std::vector<std::pair<Scalar, unsigned>> split_roots(const Poly& p, const char* what) {
  Factorization f = factor_over_rationals(p);
  if (!f.splits()) throw Error(what);
  std::vector<std::pair<Scalar, unsigned>> roots;
  for (const auto& fac : f.factors) roots.emplace_back(-fac.poly.coeff(0), fac.multiplicity);
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return roots;
}

bool has_ordering_hazard(std::span<const Scalar> t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (t[j] - t[i] + 1 == 0) return true;
  return false;
}

bool has_coincidence(std::span<const Scalar> t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (t[i] == t[j]) return true;
  return false;
}

QVec vacuum(std::size_t dim) {
  QVec v(dim, Scalar(0));
  v[0] = 1;
  return v;
}

QVec direct_product(const OpPoly& t12, std::span<const Scalar> t) {
  QVec v = vacuum(t12.dim());
  for (std::size_t i = t.size(); i-- > 0;) v = t12(t[i]) * v;
  Scalar scale = 1;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) scale *= t[j] - t[i] + 1;
  for (auto& c : v) c /= scale;
  return v;
}

// t_i -> t_i + (i+1) eps; vector entries are polynomials in eps.
QVec eps_product(const OpPoly& t12, std::span<const Scalar> t) {
  const std::size_t dim = t12.dim();
  std::vector<Poly> v(dim);
  v[0] = Poly::constant(1);
  auto shift = [&](std::size_t i) { return Poly({t[i], Scalar(static_cast<long>(i + 1))}); };
  for (std::size_t i = t.size(); i-- > 0;) {
    std::vector<Poly> next(dim);
    const Poly lin = shift(i);
    Poly power = Poly::constant(1);
    for (std::size_t d = 0; d <= static_cast<std::size_t>(std::max(t12.degree(), 0)); ++d) {
      const QMatrix c = t12.coeff(d);
      for (std::size_t a = 0; a < dim; ++a) {
        Poly acc;
        for (std::size_t b = 0; b < dim; ++b)
          if (!is_zero(c(a, b)) && !v[b].is_zero()) acc += v[b] * c(a, b);
        if (!acc.is_zero()) next[a] += acc * power;
      }
      power *= lin;
    }
    v = std::move(next);
  }
  Poly den = Poly::constant(1);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) den *= shift(j) - shift(i) + Poly::constant(1);
  QVec out(dim);
  try {
    for (std::size_t a = 0; a < dim; ++a) out[a] = eps_limit(RatFun(v[a], den));
  } catch (const EpsPoleError&) {
    throw Error("Bethe vector undefined at this configuration");
  }
  return out;
}

}  // namespace

CharPair char_pair(const ModuleSpec& spec) {
  CharPair cp;
  cp.phi = drinfeld_phi(spec);
  cp.psi = drinfeld_psi(spec);
  cp.gamma = cp.phi * spec.q1 - cp.psi * spec.q2;
  cp.normalizer = normalizer(spec);
  cp.zeta1 = RatFun(cp.phi, cp.normalizer);
  cp.zeta2 = RatFun(cp.psi, cp.normalizer);
  return cp;
}

unsigned Divisor::mult(const Scalar& a) const {
  for (const auto& [r, m] : roots)
    if (r == a) return m;
  return 0;
}

std::vector<Scalar> Divisor::root_list() const {
  std::vector<Scalar> out;
  for (const auto& [r, m] : roots)
    for (unsigned i = 0; i < m; ++i) out.push_back(r);
  return out;
}

bool Divisor::simple() const {
  return std::all_of(roots.begin(), roots.end(), [](const auto& r) { return r.second == 1; });
}

Divisor make_divisor(const std::vector<Scalar>& roots) {
  Divisor d;
  d.y = Poly::from_roots(roots);
  std::vector<Scalar> sorted = roots;
  std::sort(sorted.begin(), sorted.end(), [](const Scalar& a, const Scalar& b) { return a > b; });
  for (const auto& r : sorted) {
    if (!d.roots.empty() && d.roots.back().first == r)
      ++d.roots.back().second;
    else
      d.roots.emplace_back(r, 1);
  }
  return d;
}

std::vector<Divisor> enumerate_divisors(const Poly& gamma, std::size_t l) {
  const auto roots = split_roots(gamma, "requires split characteristic polynomial");
  std::vector<Divisor> out;
  std::vector<unsigned> m(roots.size(), 0);
  // Multiplicity vectors in lexicographic order, largest root first.
  auto rec = [&](auto&& self, std::size_t idx, std::size_t left) -> void {
    if (idx == roots.size()) {
      if (left != 0) return;
      std::vector<Scalar> rl;
      for (std::size_t i = 0; i < roots.size(); ++i)
        for (unsigned c = 0; c < m[i]; ++c) rl.push_back(roots[i].first);
      out.push_back(make_divisor(rl));
      return;
    }
    const unsigned cap = std::min<std::size_t>(roots[idx].second, left);
    for (unsigned c = cap + 1; c-- > 0;) {
      m[idx] = c;
      self(self, idx + 1, left - c);
    }
    m[idx] = 0;
  };
  rec(rec, 0, l);
  return out;
}

BetheVector bethe_vector(const MonodromyPencil& m, std::span<const Scalar> t, bool force_eps) {
  BetheVector b;
  b.roots.assign(t.begin(), t.end());
  const OpPoly& t12 = m.t[0][1];
  if (force_eps || has_coincidence(t)) {
    b.vec = eps_product(t12, t);
    b.provenance = Provenance::eps_limit;
    return b;
  }
  if (!has_ordering_hazard(t)) {
    b.vec = direct_product(t12, t);
    return b;
  }
  std::vector<Scalar> sorted(t.begin(), t.end());
  std::sort(sorted.begin(), sorted.end());
  if (!has_ordering_hazard(sorted)) {
    b.vec = direct_product(t12, sorted);
    b.provenance = Provenance::reordered;
    return b;
  }
  b.vec = eps_product(t12, t);
  b.provenance = Provenance::eps_limit;
  return b;
}

BetheVector bethe_vector(const ModuleSpec& spec, std::span<const Scalar> t, bool force_eps) {
  if (t.size() > spec.k()) throw Error("more Bethe roots than tensor factors");
  return bethe_vector(tensor_monodromy(spec), t, force_eps);
}

Poly eigenvalue_pencil(const Divisor& y, const CharPair& cp) {
  auto [q, r] = Poly::divmod(cp.gamma, y.y);
  if (!r.is_zero()) throw Error("divisor does not divide the characteristic polynomial");
  return y.y.shifted(1) * q;
}

Poly eigenvalue_pencil(const Divisor& y, const ModuleSpec& spec) { return eigenvalue_pencil(y, char_pair(spec)); }

OnShellResult verify_on_shell(const ModuleSpec& spec, const MonodromyPencil& m, const Poly& y) {
  OnShellResult res;
  const CharPair cp = char_pair(spec);
  const Poly ym = y.monic();
  res.on_shell = Poly::divmod(cp.gamma, ym).second.is_zero();
  Divisor d;
  d.y = ym;
  d.roots = split_roots(ym, "Bethe roots must be rational");
  const auto roots = d.root_list();
  const BetheVector b = bethe_vector(m, roots);
  res.nonzero = !b.is_zero();

  const auto tv = transfer_pencil(m, spec.q1, spec.q2).apply(b.vec);
  const Poly rhs = ym.shifted(1) * cp.gamma;
  const std::size_t top = std::max<std::size_t>(tv.size() + ym.coeffs().size(), rhs.coeffs().size() + 1);
  bool ok = true;
  for (std::size_t e = 0; e < top && ok; ++e) {
    QVec lhs(b.vec.size(), Scalar(0));
    for (std::size_t i = 0; i <= e && i < ym.coeffs().size(); ++i)
      if (e - i < tv.size())
        for (std::size_t a = 0; a < lhs.size(); ++a) lhs[a] += ym.coeffs()[i] * tv[e - i][a];
    const Scalar c = rhs.coeff(e);
    for (std::size_t a = 0; a < lhs.size(); ++a)
      if (lhs[a] != c * b.vec[a]) {
        ok = false;
        res.failing_coefficient = e;
        break;
      }
  }
  res.pass = ok && res.on_shell && res.nonzero;
  return res;
}

OnShellResult verify_on_shell(const ModuleSpec& spec, const Poly& y) {
  return verify_on_shell(spec, tensor_monodromy(spec), y);
}

Weight level_weight(const ModuleSpec& spec, std::size_t l) {
  Weight w{0, 0};
  for (const auto& x : spec.weights) {
    w.l1 += x.l1;
    w.l2 += x.l2;
  }
  w.l1 -= static_cast<long>(l);
  w.l2 += static_cast<long>(l);
  return w;
}

QMatrix level_subspace(const ModuleSpec& spec, const GlModule& g, std::size_t l, bool singular) {
  const Weight w = level_weight(spec, l);
  return singular ? singular_subspace(g, w) : weight_space(g, w);
}

std::size_t level_count(const ModuleSpec& spec) { return spec.untwisted() ? spec.k() : spec.k() + 1; }

std::vector<QMatrix> restricted_transfer_family(const OpPoly& tq, const QMatrix& subspace, std::size_t k) {
  std::vector<QMatrix> ops;
  for (std::size_t d = 0; d <= k; ++d) ops.push_back(restrict_to(tq.coeff(d), subspace));
  return ops;
}

bool CompletenessReport::complete() const {
  return split && std::all_of(levels.begin(), levels.end(), [](const LevelReport& l) { return l.exhausted; });
}

CompletenessReport completeness_report(const ModuleSpec& spec) {
  spec.validate();
  CompletenessReport rep;
  rep.flags = cyclicity_and_irreducibility(spec);
  const CharPair cp = char_pair(spec);
  rep.split = factor_over_rationals(cp.gamma).splits();
  if (!rep.split) return rep;

  const MonodromyPencil m = tensor_monodromy(spec);
  const GlModule g = module_gl_action(spec);
  const OpPoly tq = transfer_pencil(m, spec.q1, spec.q2);
  const bool singular = spec.untwisted();

  for (std::size_t l = 0; l < level_count(spec); ++l) {
    LevelReport lr;
    lr.level = l;
    lr.singular = singular;
    const QMatrix sub = level_subspace(spec, g, l, singular);
    lr.subspace_dim = sub.cols();
    const auto ops = restricted_transfer_family(tq, sub, spec.k());

    std::vector<std::vector<Scalar>> chars;
    for (const auto& y : enumerate_divisors(cp.gamma, l)) {
      DivisorEntry e;
      e.divisor = y;
      e.eigenvalue = eigenvalue_pencil(y, cp);
      const auto roots = y.root_list();
      const BetheVector b = bethe_vector(m, roots);
      e.nonzero = !b.is_zero();
      e.onshell = verify_on_shell(spec, m, y.y).pass;
      std::vector<Scalar> ch;
      for (std::size_t d = 0; d <= spec.k(); ++d) ch.push_back(e.eigenvalue.coeff(d));
      chars.push_back(std::move(ch));
      lr.divisors.push_back(std::move(e));
      if (lr.subspace_dim > 0 && lr.divisors.back().nonzero) {
        auto& last = lr.divisors.back();
        last.in_eigenspace = in_span(sub, b.vec);
        if (last.in_eigenspace) {
          const QVec c = coordinates(sub, b.vec);
          for (std::size_t d = 0; d < ops.size(); ++d) {
            QVec img = ops[d] * c;
            for (std::size_t a = 0; a < c.size(); ++a)
              if (img[a] != chars.back()[d] * c[a]) last.in_eigenspace = false;
          }
        }
      }
    }

    if (lr.subspace_dim > 0) {
      const auto spaces = joint_generalized_eigenspaces(ops, chars);
      for (std::size_t i = 0; i < spaces.size(); ++i) {
        lr.divisors[i].eigenspace_dim = spaces[i].eigenspace.cols();
        lr.divisors[i].generalized_dim = spaces[i].generalized.cols();
        lr.eigenvector_dim += spaces[i].eigenspace.cols();
        lr.generalized_total += spaces[i].generalized.cols();
      }
    }
    lr.diagonalizable = lr.eigenvector_dim == lr.subspace_dim;
    lr.exhausted = lr.generalized_total == lr.subspace_dim &&
                   std::all_of(lr.divisors.begin(), lr.divisors.end(), [](const DivisorEntry& e) {
                     return e.eigenspace_dim == 0 || (e.eigenspace_dim == 1 && e.nonzero && e.in_eigenspace);
                   });
    rep.levels.push_back(std::move(lr));
  }
  return rep;
}

}  // namespace gl11
