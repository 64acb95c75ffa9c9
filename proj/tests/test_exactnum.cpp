#include <doctest.h>

#include <random>

#include "gl11/factor.hpp"
#include "gl11/linalg.hpp"
#include "gl11/ratfun.hpp"
#include "support.hpp"

using namespace gl11;
using gl11::test::q;

TEST_CASE("rationals parse canonically and reject malformed text") {
  CHECK(parse_scalar("3/6") == q(1, 2));
  CHECK(parse_scalar(" -4/2 ") == -2);
  CHECK(to_string(parse_scalar("-10/4")) == "-5/2");
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_scalar("abc"), Error);
  CHECK_THROWS_AS(parse_scalar("1.5"), Error);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(2, 3) == 0);
}

TEST_CASE("polynomial arithmetic and printing") {
  const Poly p{q(1, 2), -1, 2};
  CHECK(to_string(p) == "2x^2-x+1/2");
  CHECK(to_string(Poly()) == "0");
  CHECK(to_string(Poly{0, -1}) == "-x");
  CHECK(p.derivative() == Poly{-1, 4});
  CHECK(p.shifted(1)(3) == p(2));
  const auto [quo, rem] = Poly::divmod(p, Poly::linear(1));
  CHECK(quo * Poly::linear(1) + rem == p);
  CHECK(gcd(Poly::from_roots({1, 2}), Poly::from_roots({2, 3})) == Poly::linear(2));
  CHECK_THROWS_AS(Poly::exact_div(p, Poly::linear(7)), Error);
}

TEST_CASE("factorization over Q") {
  const Factorization a = factor_over_rationals(Poly{q(3, 4), 3, 3});
  CHECK(a.leading == 3);
  REQUIRE(a.factors.size() == 1);
  CHECK(a.factors[0].poly == Poly::linear(q(-1, 2)));
  CHECK(a.factors[0].multiplicity == 2);
  CHECK(a.splits());

  const Factorization b = factor_over_rationals(Poly{2, 1});
  REQUIRE(b.factors.size() == 1);
  CHECK(b.factors[0].poly == Poly{2, 1});
  CHECK(b.factors[0].multiplicity == 1);

  const Factorization c = factor_over_rationals(Poly{1, 0, 1});
  REQUIRE(c.factors.size() == 1);
  CHECK(c.factors[0].poly == Poly{1, 0, 1});
  CHECK_FALSE(c.splits());
  CHECK_THROWS_AS(factor_over_rationals(Poly()), Error);
}

TEST_CASE("factorization expands back to its input") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Poly p = Poly::constant(q(static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 3) + 1));
    const int parts = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < parts; ++i) {
      if (rng() % 3 == 0)
        p *= Poly{static_cast<long>(rng() % 5) + 1, 0, 1};
      else
        p *= Poly::linear(q(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3) + 1));
    }
    const Factorization f = factor_over_rationals(p);
    CHECK(f.expand() == p);
    for (const auto& fac : f.factors) CHECK(fac.poly.leading() == 1);
  }
}

TEST_CASE("expansion at infinity") {
  const Scalar a = q(2, 3);
  CHECK(laurent_expand(RatFun(Poly::constant(1), Poly::linear(a)), 3) == std::vector<Scalar>{0, 1, a, a * a});
  CHECK(laurent_expand(RatFun(Poly{1, 1}, Poly::x()), 2) == std::vector<Scalar>{1, 1, 0});
  CHECK(laurent_expand(RatFun(Poly{2, 1}, Poly::x()), 2) == std::vector<Scalar>{1, 2, 0});
  CHECK_THROWS_AS(laurent_expand(RatFun(Poly{0, 0, 1}, Poly::x()), 2), Error);
}

TEST_CASE("limits at eps = 0") {
  CHECK(eps_limit(RatFun(Poly{0, 2, 1}, Poly::x())) == 2);
  CHECK(eps_limit(RatFun(Poly::monomial(3, 3), Poly::monomial(1, 3))) == 3);
  try {
    eps_limit(RatFun(Poly::constant(1), Poly::x()));
    FAIL("expected a pole");
  } catch (const EpsPoleError& e) {
    CHECK(e.pole_order() == 1);
  }
}

TEST_CASE("joint eigenspaces from given characters") {
  const Scalar c = q(5, 2);
  QMatrix j(2, 2);
  j(0, 0) = j(1, 1) = c;
  j(0, 1) = 1;
  std::vector<QMatrix> ops{j};
  auto s = joint_generalized_eigenspaces(ops, {{c}});
  CHECK(s[0].eigenspace.cols() == 1);
  CHECK(s[0].generalized.cols() == 2);

  ops = {QMatrix::identity(3)};
  s = joint_generalized_eigenspaces(ops, {{1}});
  CHECK(s[0].eigenspace.cols() == 3);
  CHECK(s[0].generalized.cols() == 3);

  QMatrix d(2, 2);
  d(0, 0) = 1;
  d(1, 1) = 2;
  ops = {d};
  s = joint_generalized_eigenspaces(ops, {{3}});
  CHECK(s[0].eigenspace.cols() == 0);
  CHECK(s[0].generalized.cols() == 0);
}

TEST_CASE("joint spectrum oracle matches characters on a polynomial family") {
  // a has blocks J(1) of size 2 and (3); b = a^2 - a commutes with it.
  QMatrix a(3, 3);
  a(0, 0) = a(1, 1) = 1;
  a(0, 1) = 1;
  a(2, 2) = 3;
  const QMatrix b = a * a - a;
  const std::vector<QMatrix> ops{a, b};
  const JointSpectrum js = joint_spectrum(ops);
  CHECK(js.split);
  REQUIRE(js.blocks.size() == 2);
  const auto s = joint_generalized_eigenspaces(ops, {{1, 0}, {3, 6}});
  CHECK(s[0].generalized.cols() == 2);
  CHECK(s[0].eigenspace.cols() == 1);
  CHECK(s[1].generalized.cols() == 1);
  for (const auto& blk : js.blocks) {
    if (blk.character == std::vector<Scalar>{1, 0}) CHECK(blk.generalized.cols() == 2);
    if (blk.character == std::vector<Scalar>{3, 6}) CHECK(blk.generalized.cols() == 1);
  }
  CHECK(commutant_dimension(ops, 3) == 3);
  const std::vector<QMatrix> none{QMatrix::identity(3)};
  CHECK(commutant_dimension(none, 3) == 9);
}

TEST_CASE("dense linear algebra identities on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = q(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 2) + 1);
    const Poly chi = characteristic_polynomial(m);
    CHECK(chi.degree() == static_cast<int>(n));
    // Cayley-Hamilton.
    QMatrix acc(n, n), pw = QMatrix::identity(n);
    for (std::size_t d = 0; d <= n; ++d, pw = pw * m) acc += pw * chi.coeff(d);
    CHECK(acc.is_zero());
    const QMatrix ns = nullspace(m);
    CHECK(rank(m) + ns.cols() == n);
    CHECK((m * ns).is_zero());
    if (ns.cols() == 0) CHECK(m * inverse(m) == QMatrix::identity(n));
  }
}

TEST_CASE("sparse echelon rank and spans") {
  SparseEchelon e;
  CHECK(e.insert(to_sparse({1, 2, 0})));
  CHECK(e.insert(to_sparse({0, 1, 1})));
  CHECK_FALSE(e.insert(to_sparse({2, 5, 1})));
  CHECK(e.rank() == 2);
  const QMatrix basis = QMatrix::from_columns({{1, 0, 1}, {0, 1, 0}}, 3);
  CHECK(in_span(basis, {2, 3, 2}));
  CHECK_FALSE(in_span(basis, {1, 0, 0}));
  CHECK(coordinates(basis, {2, 3, 2}) == QVec{2, 3});
  CHECK_THROWS_AS(coordinates(basis, {1, 0, 0}), Error);
}
