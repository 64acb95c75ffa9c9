#include <doctest.h>

#include "gl11/bethe.hpp"
#include "support.hpp"

using namespace gl11;
using gl11::test::q;

TEST_CASE("characteristic polynomials") {
  CHECK(char_pair(test::e2()).gamma == Poly{q(1, 2), 2});
  CHECK(char_pair(test::double_root()).gamma == Poly{q(3, 4), 3, 3});
  CHECK(char_pair(test::e1()).gamma == Poly{2, 1});
  for (const auto& s : suite_specs()) {
    const CharPair cp = char_pair(s.spec);
    CHECK(cp.gamma == cp.phi * s.spec.q1 - cp.psi * s.spec.q2);
    CHECK(cp.zeta1 == RatFun(cp.phi, cp.normalizer));
    CHECK(cp.zeta2 == RatFun(cp.psi, cp.normalizer));
  }
}

TEST_CASE("divisor enumeration") {
  auto ds = enumerate_divisors(Poly{q(1, 2), 2}, 1);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].y == Poly::linear(q(-1, 4)));

  ds = enumerate_divisors(Poly{q(3, 4), 3, 3}, 1);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].y == Poly::linear(q(-1, 2)));
  CHECK(enumerate_divisors(Poly{q(3, 4), 3, 3}, 2).size() == 1);

  ds = enumerate_divisors(Poly::from_roots({1, 3}) * Scalar(5), 1);
  CHECK(ds.size() == 2);
  ds = enumerate_divisors(Poly{2, 1}, 0);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].y == Poly::constant(1));
  CHECK_THROWS_AS(enumerate_divisors(Poly{1, 0, 1}, 1), Error);
}

TEST_CASE("Bethe vectors") {
  const std::vector<Scalar> t{-2};
  const BetheVector b = bethe_vector(test::e1(), t);
  CHECK(b.vec[0] == 0);
  CHECK(b.vec[1] != 0);

  const std::vector<Scalar> none;
  const BetheVector vac = bethe_vector(test::e2(), none);
  CHECK(vac.vec == test::unit(4, 0));

  const std::vector<Scalar> dbl{q(-1, 2), q(-1, 2)};
  const BetheVector d = bethe_vector(test::double_root(), dbl);
  CHECK_FALSE(d.is_zero());
  CHECK(d.provenance == Provenance::eps_limit);
}

TEST_CASE("eigenvalue pencil") {
  CHECK(eigenvalue_pencil(make_divisor({-2}), test::e1()) == Poly{1, 1});
  CHECK(eigenvalue_pencil(make_divisor({q(-1, 4)}), test::e2()) == Poly{q(-3, 2), 2});
  CHECK(eigenvalue_pencil(make_divisor({}), test::e2()) == char_pair(test::e2()).gamma);
  CHECK_THROWS_AS(eigenvalue_pencil(make_divisor({7}), test::e2()), Error);
}

TEST_CASE("on-shell identity") {
  CHECK(verify_on_shell(test::e1(), Poly::linear(-2)).pass);
  CHECK(verify_on_shell(test::e2(), Poly::linear(q(-1, 4))).pass);
  CHECK(verify_on_shell(test::e2(), Poly::constant(1)).pass);
  CHECK(verify_on_shell(test::double_root(), Poly::linear(q(-1, 2)).pow(2)).pass);
  const OnShellResult off = verify_on_shell(test::e2(), Poly::linear(3));
  CHECK_FALSE(off.pass);
  CHECK_FALSE(off.on_shell);
}

TEST_CASE("on-shell holds for every divisor of every cyclic split suite spec") {
  for (const auto& s : suite_specs()) {
    if (!cyclicity_and_irreducibility(s.spec).cyclic) continue;
    const Poly gamma = char_pair(s.spec).gamma;
    for (std::size_t l = 0; l <= static_cast<std::size_t>(gamma.degree()); ++l)
      for (const auto& y : enumerate_divisors(gamma, l)) {
        CAPTURE(s.name);
        CAPTURE(to_string(y.y));
        CHECK(verify_on_shell(s.spec, y.y).pass);
      }
  }
}

TEST_CASE("completeness on the two-site chain") {
  const CompletenessReport r = completeness_report(test::e2());
  CHECK(r.complete());
  REQUIRE(r.levels.size() == 2);
  for (const auto& l : r.levels) {
    CHECK(l.singular);
    CHECK(l.subspace_dim == 1);
    REQUIRE(l.divisors.size() == 1);
    CHECK(l.divisors[0].nonzero);
    CHECK(l.divisors[0].in_eigenspace);
  }
  CHECK(r.levels[0].divisors[0].eigenvalue == Poly{q(1, 2), 2});
  CHECK(r.levels[1].divisors[0].eigenvalue == Poly{q(-3, 2), 2});
}

TEST_CASE("completeness on the one-site twisted chain") {
  const CompletenessReport r = completeness_report(test::e1());
  CHECK(r.complete());
  REQUIRE(r.levels.size() == 2);
  CHECK(r.levels[0].divisors[0].eigenvalue == Poly{2, 1});
  CHECK(r.levels[1].divisors[0].eigenvalue == Poly{1, 1});
  std::size_t total = 0;
  for (const auto& l : r.levels) total += l.eigenvector_dim;
  CHECK(total == 2);
}

TEST_CASE("Jordan block at a double root") {
  const CompletenessReport r = completeness_report(test::double_root());
  REQUIRE(r.levels.size() == 3);
  std::size_t eig = 0, dim = 0;
  for (const auto& l : r.levels) {
    eig += l.eigenvector_dim;
    dim += l.subspace_dim;
  }
  CHECK(eig == 3);
  CHECK(dim == 4);
  CHECK_FALSE(r.levels[1].diagonalizable);
  CHECK(r.levels[1].divisors.size() == 1);
  CHECK(r.levels[1].divisors[0].eigenspace_dim == 1);
  CHECK(r.levels[1].divisors[0].generalized_dim == 2);
  CHECK(r.levels[2].divisors[0].generalized_dim == 1);
  CHECK(r.complete());
}

TEST_CASE("level weights and counts") {
  CHECK(level_weight(test::e2(), 1) == Weight{1, 1});
  CHECK(level_count(test::e2()) == 2);
  CHECK(level_count(test::e1()) == 2);
  CHECK(level_count(suite_spec("T3")) == 4);
}
