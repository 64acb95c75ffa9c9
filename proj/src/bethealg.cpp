#include "gl11/bethealg.hpp"

#include <algorithm>

#include "gl11/factor.hpp"
#include "gl11/linalg.hpp"

namespace gl11 {

namespace {

SparseEchelon::SparseVec flatten(const QMatrix& m) {
  SparseEchelon::SparseVec v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) v.emplace_back(i * m.cols() + j, m(i, j));
  return v;
}

std::vector<Scalar> elementary_symmetric(const std::vector<Scalar>& w) {
  std::vector<Scalar> e(w.size() + 1, Scalar(0));
  e[0] = 1;
  for (const auto& x : w)
    for (std::size_t i = w.size(); i >= 1; --i) e[i] += e[i - 1] * x;
  return e;
}

std::vector<Scalar> gamma_roots(const Poly& gamma) {
  Factorization f = factor_over_rationals(gamma);
  if (!f.splits()) throw Error("requires split characteristic polynomial");
  std::vector<Scalar> roots;
  for (const auto& fac : f.factors)
    for (unsigned i = 0; i < fac.multiplicity; ++i) roots.push_back(-fac.poly.coeff(0));
  return roots;
}

std::size_t span_rank(const std::vector<QVec>& vs) {
  SparseEchelon e;
  for (const auto& v : vs) e.insert(to_sparse(v));
  return e.rank();
}

}  // namespace

CoefficientFamily coefficient_family(const ModuleSpec& spec, std::size_t level, bool singular_only) {
  spec.validate();
  if (spec.untwisted() && !singular_only) throw Error("untwisted Bethe algebra acts on singular subspaces only");
  if (level >= level_count(spec)) throw Error("invalid weight: level " + std::to_string(level) + " out of range");
  CoefficientFamily fam;
  fam.reduced = reduce_lambda2(spec).reduced;
  fam.level = level;
  fam.singular = singular_only;
  const auto a = string_points(fam.reduced);
  fam.n = a.size();
  fam.a_poly = Poly::from_roots(a);
  const auto e = elementary_symmetric(a);
  for (std::size_t i = 1; i <= fam.n; ++i) fam.c.push_back(e[i]);

  const MonodromyPencil m = tensor_monodromy(fam.reduced);
  const Poly quotient = Poly::exact_div(fam.a_poly, m.normalizer);
  const OpPoly p = quotient * transfer_pencil(m, spec.q1, spec.q2);
  const GlModule g = module_gl_action(fam.reduced);
  fam.subspace = level_subspace(fam.reduced, g, level, singular_only);
  if (fam.subspace.cols() == 0) return fam;
  for (std::size_t i = 1; i <= fam.n; ++i) fam.b.push_back(restrict_to(p.coeff(fam.n - i), fam.subspace));
  return fam;
}

std::vector<Scalar> b_character(const CoefficientFamily& fam, const Poly& eigenvalue) {
  const Poly p = Poly::exact_div(fam.a_poly, normalizer(fam.reduced)) * eigenvalue;
  std::vector<Scalar> ch;
  for (std::size_t i = 1; i <= fam.n; ++i) ch.push_back(p.coeff(fam.n - i));
  return ch;
}

bool family_commutes(const CoefficientFamily& fam) {
  for (std::size_t i = 0; i < fam.b.size(); ++i)
    for (std::size_t j = i + 1; j < fam.b.size(); ++j)
      if (!commutes(fam.b[i], fam.b[j])) return false;
  return true;
}

AlgebraImage algebra_image(const CoefficientFamily& fam) {
  AlgebraImage alg;
  const std::size_t d = fam.subspace.cols();
  if (d == 0) return alg;
  SparseEchelon ech;
  auto add = [&](const QMatrix& m) {
    if (ech.insert(flatten(m))) alg.basis.push_back(m);
  };
  add(QMatrix::identity(d));
  for (std::size_t next = 0; next < alg.basis.size(); ++next)
    for (const auto& g : fam.b) add(g * alg.basis[next]);
  return alg;
}

std::optional<QVec> find_cyclic_vector(const std::vector<QMatrix>& algebra, const QMatrix& space_basis) {
  const std::size_t d = space_basis.cols();
  if (d == 0) return std::nullopt;
  auto generates = [&](const QVec& v) {
    std::vector<QVec> orbit;
    for (const auto& a : algebra) orbit.push_back(a * v);
    return span_rank(orbit) == d;
  };
  for (std::size_t j = 0; j < d; ++j) {
    QVec v = space_basis.column(j);
    if (generates(v)) return v;
  }
  for (long c = 1; c <= static_cast<long>(d * d + 1); ++c) {
    QVec v(space_basis.rows(), Scalar(0));
    Scalar w = 1;
    for (std::size_t j = 0; j < d; ++j, w *= c)
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += w * space_basis(i, j);
    if (generates(v)) return v;
  }
  return std::nullopt;
}

RegularRepResult regular_rep_check(const CoefficientFamily& fam, const AlgebraImage& alg) {
  RegularRepResult r;
  r.algebra_dim = alg.dimension();
  r.subspace_dim = fam.subspace.cols();
  r.cyclic_vector = find_cyclic_vector(alg.basis, QMatrix::identity(r.subspace_dim));
  r.pass = r.algebra_dim == r.subspace_dim && r.cyclic_vector.has_value();
  return r;
}

bool maximal_commutative(const CoefficientFamily& fam, const AlgebraImage& alg) {
  const std::size_t d = fam.subspace.cols();
  for (std::size_t i = 0; i < alg.basis.size(); ++i)
    for (std::size_t j = i + 1; j < alg.basis.size(); ++j)
      if (!commutes(alg.basis[i], alg.basis[j])) return false;
  return commutant_dimension(fam.b, d) == alg.dimension();
}

PresentationResult presentation_check(const ModuleSpec& spec, std::size_t level) {
  PresentationResult res;
  const CharPair cp = char_pair(spec);
  const auto roots = gamma_roots(cp.gamma);
  const std::size_t deg = static_cast<std::size_t>(cp.gamma.degree());
  const Scalar lead = cp.gamma.leading();
  const Scalar expected_lead = spec.untwisted() ? spec.n() : Scalar(spec.q1 - spec.q2);

  const auto sigma = elementary_symmetric(roots);
  res.eps_identity = lead == expected_lead;
  for (std::size_t i = 1; i <= deg; ++i) {
    Scalar eps = cp.gamma.coeff(deg - i) / lead;
    if (i % 2 == 1) eps = -eps;
    res.eps.push_back(eps);
    if (eps != sigma[i]) res.eps_identity = false;
  }
  res.quotient_dim = static_cast<std::size_t>(binomial(static_cast<long>(deg), static_cast<long>(level)).get_num().get_ui());

  const CoefficientFamily fam = coefficient_family(spec, level, spec.untwisted());
  const JointSpectrum oracle = joint_spectrum(fam.b);

  bool ok = res.eps_identity;
  for (const auto& y : enumerate_divisors(cp.gamma, level)) {
    PresentationEntry e;
    e.divisor = y;
    std::vector<Scalar> rest = roots;
    Poly presented = Poly::constant(lead);
    for (const auto& w : y.root_list()) {
      presented *= Poly::linear(w + 1);
      rest.erase(std::find(rest.begin(), rest.end(), w));
    }
    for (const auto& w : rest) presented *= Poly::linear(w);
    e.presented = presented;
    e.eigenvalue = eigenvalue_pencil(y, cp);
    e.matches_eigenvalue = e.presented == e.eigenvalue;
    if (fam.subspace.cols() > 0) {
      const auto ch = b_character(fam, e.presented);
      e.found_in_spectrum = std::any_of(oracle.blocks.begin(), oracle.blocks.end(),
                                        [&](const JointBlock& b) { return b.character == ch; });
    }
    ok = ok && e.matches_eigenvalue && e.found_in_spectrum;
    res.entries.push_back(std::move(e));
  }
  res.pass = ok;
  return res;
}

SpectralResult spectral_analysis(const CoefficientFamily& fam, const AlgebraImage& alg,
                                 const std::vector<Divisor>& divisors, const Poly& gamma) {
  SpectralResult res;
  const std::size_t d = fam.subspace.cols();
  if (d == 0) return res;
  const CharPair cp{Poly(), Poly(), gamma, Poly(), RatFun(), RatFun()};
  std::vector<std::vector<Scalar>> chars;
  for (const auto& y : divisors) chars.push_back(b_character(fam, eigenvalue_pencil(y, cp)));
  const auto spaces = joint_generalized_eigenspaces(fam.b, chars);

  const Divisor full = make_divisor(gamma_roots(gamma));
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    SpectralEntry e;
    e.divisor = divisors[i];
    e.eigenspace_dim = spaces[i].eigenspace.cols();
    e.generalized_dim = spaces[i].generalized.cols();
    Scalar expected = 1;
    for (const auto& [a, m] : divisors[i].roots) expected *= binomial(full.mult(a), m);
    e.expected_generalized_dim = static_cast<std::size_t>(expected.get_num().get_ui());
    e.cyclic = e.generalized_dim > 0 && find_cyclic_vector(alg.basis, spaces[i].generalized).has_value();
    res.generalized_total += e.generalized_dim;
    res.entries.push_back(std::move(e));
  }
  res.sums_to_dimension = res.generalized_total == d;

  const JointSpectrum oracle = joint_spectrum(fam.b);
  res.oracle_agrees = oracle.split && oracle.blocks.size() == chars.size();
  for (const auto& block : oracle.blocks) {
    auto it = std::find(chars.begin(), chars.end(), block.character);
    if (it == chars.end() ||
        res.entries[static_cast<std::size_t>(it - chars.begin())].generalized_dim != block.generalized.cols())
      res.oracle_agrees = false;
  }
  return res;
}

}  // namespace gl11
