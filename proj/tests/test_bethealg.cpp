#include <doctest.h>

#include "gl11/bethealg.hpp"
#include "support.hpp"

using namespace gl11;
using gl11::test::q;

TEST_CASE("B_1 is the scalar n in the untwisted case") {
  for (const char* name : {"E2", "DR", "mixed", "U3", "U3m", "LAM"}) {
    const ModuleSpec s = suite_spec(name);
    for (std::size_t l = 0; l < level_count(s); ++l) {
      const CoefficientFamily fam = coefficient_family(s, l, true);
      if (fam.subspace.cols() == 0) continue;
      CAPTURE(name);
      CHECK(fam.b[0] == QMatrix::identity(fam.subspace.cols()) * Scalar(static_cast<long>(fam.n)));
    }
  }
}

TEST_CASE("central scalars are elementary symmetric functions") {
  const Scalar a1 = q(1, 3), a2 = -2;
  const CoefficientFamily fam = coefficient_family(make_spec({{1, 0}, {1, 0}}, {a1, a2}, 1, 1), 0, true);
  CHECK(fam.c == std::vector<Scalar>{a1 + a2, a1 * a2});
  CHECK(fam.a_poly == Poly::from_roots({a1, a2}));
}

TEST_CASE("family on the two-site singular line acts by eigenvalue coefficients") {
  const CoefficientFamily fam = coefficient_family(test::e2(), 1, true);
  REQUIRE(fam.subspace.cols() == 1);
  const auto ch = b_character(fam, Poly{q(-3, 2), 2});
  for (std::size_t i = 0; i < fam.b.size(); ++i) CHECK(fam.b[i](0, 0) == ch[i]);
  CHECK(algebra_image(fam).dimension() == 1);
}

TEST_CASE("algebra dimensions") {
  auto dim = [](const ModuleSpec& s, std::size_t l, bool singular) {
    return algebra_image(coefficient_family(s, l, singular)).dimension();
  };
  CHECK(dim(suite_spec("U3"), 1, true) == 2);
  CHECK(dim(suite_spec("U3"), 0, true) == 1);
  CHECK(dim(suite_spec("T2"), 1, false) == 2);
  CHECK(dim(test::double_root(), 1, true) == 2);
  CHECK(dim(test::e2(), 1, true) == 1);
  CHECK_THROWS_AS(coefficient_family(test::e2(), 0, false), Error);
  CHECK_THROWS_AS(coefficient_family(test::e2(), 2, true), Error);
}

TEST_CASE("regular representation and maximal commutativity") {
  for (const auto& s : suite_specs()) {
    if (!cyclicity_and_irreducibility(s.spec).cyclic) continue;
    for (std::size_t l = 0; l < level_count(s.spec); ++l) {
      const CoefficientFamily fam = coefficient_family(s.spec, l, s.spec.untwisted());
      if (fam.subspace.cols() == 0) continue;
      CAPTURE(s.name);
      CAPTURE(l);
      const AlgebraImage alg = algebra_image(fam);
      CHECK(family_commutes(fam));
      const RegularRepResult r = regular_rep_check(fam, alg);
      CHECK(r.pass);
      CHECK(maximal_commutative(fam, alg));
    }
  }
}

TEST_CASE("presentation eigenvalues") {
  PresentationResult p = presentation_check(test::e2(), 1);
  CHECK(p.pass);
  REQUIRE(p.entries.size() == 1);
  CHECK(p.entries[0].presented == Poly{q(-3, 2), 2});

  p = presentation_check(test::e2(), 0);
  CHECK(p.entries[0].presented == char_pair(test::e2()).gamma);

  p = presentation_check(test::e1(), 1);
  CHECK(p.pass);
  CHECK(p.entries[0].presented == Poly{1, 1});
  CHECK(p.eps == std::vector<Scalar>{-2});
}

TEST_CASE("generalized eigenspaces at the double root") {
  const ModuleSpec s = test::double_root();
  const Poly gamma = char_pair(s).gamma;
  for (std::size_t l : {1u, 2u}) {
    const CoefficientFamily fam = coefficient_family(s, l, true);
    const AlgebraImage alg = algebra_image(fam);
    const SpectralResult r = spectral_analysis(fam, alg, enumerate_divisors(gamma, l), gamma);
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].eigenspace_dim == 1);
    CHECK(r.entries[0].generalized_dim == (l == 1 ? 2u : 1u));
    CHECK(r.entries[0].expected_generalized_dim == r.entries[0].generalized_dim);
    CHECK(r.entries[0].cyclic);
    CHECK(r.oracle_agrees);
    CHECK(r.sums_to_dimension);
  }
}

TEST_CASE("square-free gamma gives one-dimensional generalized eigenspaces") {
  for (const char* name : {"U3", "T3", "U3m", "T3m", "T2"}) {
    const ModuleSpec s = suite_spec(name);
    const Poly gamma = char_pair(s).gamma;
    for (std::size_t l = 0; l < level_count(s); ++l) {
      const CoefficientFamily fam = coefficient_family(s, l, s.untwisted());
      if (fam.subspace.cols() == 0) continue;
      const SpectralResult r = spectral_analysis(fam, algebra_image(fam), enumerate_divisors(gamma, l), gamma);
      for (const auto& e : r.entries) CHECK(e.generalized_dim == 1);
      CHECK(r.sums_to_dimension);
    }
  }
}
