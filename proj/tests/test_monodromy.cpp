#include <doctest.h>

#include "gl11/fusion.hpp"
#include "gl11/linalg.hpp"
#include "support.hpp"

using namespace gl11;
using gl11::test::acts_as;
using gl11::test::q;
using gl11::test::unit;

namespace {

bool same_pencil(const MonodromyPencil& a, const MonodromyPencil& b) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!(a.t[i][j] == b.t[i][j])) return false;
  return a.normalizer == b.normalizer;
}

}  // namespace

TEST_CASE("one-site evaluation module") {
  const MonodromyPencil m = evaluation_monodromy({1, 0}, 0);
  const QVec v1 = unit(2, 0), v2 = unit(2, 1);
  CHECK(acts_as(m.entry(0, 0), v1, Poly{1, 1}));
  CHECK(acts_as(m.entry(1, 1), v1, Poly::x()));
  const Scalar q1 = q(7, 3), q2 = -2;
  CHECK(acts_as(transfer_pencil(m, q1, q2), v2, Poly{q2, q1 - q2}));
}

TEST_CASE("trivial weight gives a scalar pencil") {
  const Scalar b = q(-3, 4);
  const MonodromyPencil m = evaluation_monodromy({0, 0}, b);
  REQUIRE(m.dim() == 1);
  CHECK(acts_as(m.entry(0, 0), unit(1, 0), Poly::linear(b)));
  CHECK(acts_as(m.entry(1, 1), unit(1, 0), Poly::linear(b)));
  CHECK(m.entry(0, 1).is_zero());
  CHECK(m.entry(1, 0).is_zero());
}

TEST_CASE("two-site vacuum eigenvalues") {
  const MonodromyPencil m = tensor_monodromy(test::e2());
  const QVec vac = unit(4, 0);
  CHECK(acts_as(m.entry(0, 0), vac, Poly::from_roots({-1, q(-1, 2)})));
  const auto img = m.entry(1, 1).apply(vac);
  const Poly diag = Poly::from_roots({0, q(1, 2)});
  for (std::size_t d = 0; d < img.size(); ++d) CHECK(img[d][0] == diag.coeff(d));
  CHECK(acts_as(transfer_pencil(m, 1, 1), vac, Poly{q(1, 2), 2}));
}

TEST_CASE("coproduct is coassociative") {
  const MonodromyPencil a = evaluation_monodromy({2, 1}, q(1, 3)), b = evaluation_monodromy({1, 0}, -2),
                        c = evaluation_monodromy({1, 1}, q(5, 2));
  CHECK(same_pencil(coproduct(coproduct(a, b), c), coproduct(a, coproduct(b, c))));
}

TEST_CASE("Lax model agrees with evaluation and tensor pencils") {
  const std::vector<Scalar> one{q(2, 5)};
  CHECK(same_pencil(lax_monodromy(one), evaluation_monodromy({1, 0}, q(2, 5))));
  const std::vector<Scalar> two{0, q(-4, 3)};
  CHECK(same_pencil(lax_monodromy(two), tensor_monodromy(make_spec({{1, 0}, {1, 0}}, two, 1, 1))));
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto pts = lax_suite_points(n).back();
    const MonodromyPencil m = lax_monodromy(pts);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        CHECK(m.entry(i, j).degree() <= static_cast<int>(n));
        const QMatrix lead = m.entry(i, j).coeff(n);
        CHECK(lead == (i == j ? QMatrix::identity(m.dim()) : QMatrix(m.dim(), m.dim())));
      }
  }
}

TEST_CASE("RTT relation on evaluation and tensor modules") {
  for (const Weight& w : std::vector<Weight>{{1, 0}, {2, 1}, {3, 0}, {0, 0}, {q(1, 2), q(-3, 2) + 2}})
    CHECK(verify_rtt(evaluation_monodromy(w, q(2, 7))).pass);
  for (const auto& s : suite_specs()) {
    CAPTURE(s.name);
    const MonodromyPencil m = tensor_monodromy(s.spec);
    CHECK(verify_rtt(m).pass);
    CHECK(verify_gl_covariance(m, module_gl_action(s.spec)));
  }
}

TEST_CASE("RTT negative control reports a witness") {
  const RttResult r = verify_rtt(with_flipped_t21(tensor_monodromy(test::e2())));
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->i >= 1);
  CHECK(r.witness->i <= 2);
}

TEST_CASE("transfer matrix eigenvalues on the one-site twisted chain") {
  const ModuleSpec s = test::e1();
  const OpPoly t = transfer_pencil(tensor_monodromy(s), s.q1, s.q2);
  CHECK(acts_as(t, unit(2, 0), Poly{2, 1}));
  CHECK(acts_as(t, unit(2, 1), Poly{1, 1}));
}

TEST_CASE("transfer coefficients commute") {
  for (const char* name : {"E2", "T2", "l2", "T3", "LAM"}) {
    const ModuleSpec s = suite_spec(name);
    const OpPoly t = transfer_pencil(tensor_monodromy(s), s.q1, s.q2);
    for (int a = 0; a <= t.degree(); ++a)
      for (int b = a + 1; b <= t.degree(); ++b) CHECK(commutes(t.coeff(a), t.coeff(b)));
  }
}

TEST_CASE("lambda2 reduction") {
  const Lambda2Reduction r = reduce_lambda2(make_spec({{2, 1}}, {0}, 1, 1));
  CHECK(r.reduced.weights[0] == Weight{3, 0});
  CHECK(r.reduced.points[0] == 1);
  CHECK(r.xi == RatFun(Poly::x(), Poly::linear(1)));

  const ModuleSpec plain = test::e2();
  const Lambda2Reduction id = reduce_lambda2(plain);
  CHECK(id.reduced.points == plain.points);
  CHECK(id.xi == RatFun(1));

  // T on the reduced module is xi times T on the original one.
  for (const char* name : {"l2", "LAM"}) {
    const ModuleSpec s = suite_spec(name);
    const Lambda2Reduction red = reduce_lambda2(s);
    const auto orig = rational_monodromy(tensor_monodromy(s));
    const auto scaled = rational_monodromy(tensor_monodromy(red.reduced));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(scaled[i][j] == orig[i][j] * red.xi);
  }
}

TEST_CASE("cyclicity and irreducibility criteria") {
  auto flags = cyclicity_and_irreducibility(test::e2());
  CHECK(flags.cyclic);
  CHECK(flags.irreducible);
  flags = cyclicity_and_irreducibility(make_spec({{1, 0}, {1, 0}}, {0, 1}, 1, 1));
  CHECK_FALSE(flags.cyclic);
  flags = cyclicity_and_irreducibility(test::double_root());
  CHECK(flags.cyclic);
  CHECK_FALSE(flags.irreducible);
  CHECK(gcd(drinfeld_phi(test::double_root()), drinfeld_psi(test::double_root())) == Poly::linear(q(-1, 2)));
}

TEST_CASE("string points") {
  CHECK(string_points(make_spec({{2, 0}}, {0}, 1, 1)) == std::vector<Scalar>{0, -1});
  CHECK(string_points(test::e2()) == std::vector<Scalar>{q(1, 2), 0});
  CHECK(string_points(suite_spec("mixed")) == std::vector<Scalar>{5, 0, -1});
  CHECK_THROWS_AS(string_points(suite_spec("l2")), Error);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(make_spec({{1, 0}}, {0, 1}, 1, 1).validate(), Error);
  CHECK_THROWS_AS(make_spec({{1, 0}}, {0}, 0, 1).validate(), Error);
  CHECK_THROWS_AS(make_spec({{q(1, 2), 0}}, {0}, 1, 1).validate(), Error);
  CHECK_THROWS_AS(make_spec({{0, 0}}, {0}, 1, 1).validate(), Error);
  CHECK_NOTHROW(make_spec({{1, 0}}, {0}, 1, 2).validate());
}
