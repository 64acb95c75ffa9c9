#include <doctest.h>

#include "gl11/fusion.hpp"
#include "support.hpp"

using namespace gl11;
using gl11::test::q;

namespace {

OpRat transfer(const MonodromyPencil& m, const Scalar& q1, const Scalar& q2) {
  return {transfer_pencil(m, q1, q2), m.normalizer};
}

RatFun lin(const Scalar& a, const Scalar& c = 0) { return RatFun(Poly{c - a, 1}); }  // x - a + c

}  // namespace

TEST_CASE("symmetrizers") {
  const SuperSpace two = SuperSpace::vector_power(2);
  const QMatrix p = graded_flip(two, 0, 1);
  const auto [a2, h2] = symmetrizers(2);
  CHECK(a2 == (QMatrix::identity(4) - p) * q(1, 2));
  CHECK(h2 == (QMatrix::identity(4) + p) * q(1, 2));
  CHECK(rank(a2) == 2);
  CHECK(rank(h2) == 2);
  // Antisymmetrizer image: v2 (x) v2 and v1 (x) v2 - v2 (x) v1.
  CHECK(a2 * test::unit(4, 3) == test::unit(4, 3));
  CHECK(a2 * QVec{0, 1, -1, 0} == QVec{0, 1, -1, 0});
  const auto [a3, h3] = symmetrizers(3);
  CHECK(a3 * a3 == a3);
  CHECK(h3 * h3 == h3);
  CHECK(rank(a3) == 2);
  CHECK(rank(h3) == 2);
  CHECK_THROWS_AS(symmetrizers(0), Error);
}

TEST_CASE("first fused transfer matrix is the transfer matrix") {
  for (const char* name : {"E1", "E2", "l2"}) {
    const ModuleSpec s = suite_spec(name);
    const MonodromyPencil m = tensor_monodromy(s);
    const OpRat t = transfer(m, s.q1, s.q2);
    CHECK(same(fused_transfer_blocks(m, s.q1, s.q2, 1, false), t));
    CHECK(same(fused_transfer_blocks(m, s.q1, s.q2, 1, true), t));
    CHECK(same(fused_transfer_expansion(m, s.q1, s.q2, 1), t));
  }
}

TEST_CASE("second fused transfer matrix on one site") {
  const Scalar a = q(-5, 3), q1 = 4, q2 = q(3, 2);
  const std::vector<Scalar> pts{a};
  const MonodromyPencil m = lax_monodromy(pts);
  const RatMatrix t2 = to_ratmatrix(fused_transfer_expansion(m, q1, q2, 2));
  const RatFun expected = RatFun(-q2) * (RatFun(q1) * lin(a, 1) - RatFun(q2) * lin(a)) / lin(a);
  CHECK(t2(0, 0) == expected);
  CHECK(compare_routes(m, q1, q2, 2).agree);
}

TEST_CASE("route agreement") {
  for (const char* name : {"E2", "T2", "mixed", "l2"}) {
    const ModuleSpec s = suite_spec(name);
    const MonodromyPencil m = tensor_monodromy(s);
    for (std::size_t k = 1; k <= 3; ++k) CHECK(compare_routes(m, s.q1, s.q2, k).agree);
  }
  const RouteComparison bad = compare_routes(with_flipped_t21(tensor_monodromy(test::e2())), 1, 1, 2);
  CHECK_FALSE(bad.agree);
  CHECK(bad.witness_degree.has_value());
}

TEST_CASE("Berezinian") {
  const Scalar a = q(2, 3), q1 = 5, q2 = q(-1, 2);
  const BerezinianResult one = berezinian(evaluation_monodromy({1, 0}, a), q1, q2);
  REQUIRE(one.value.has_value());
  CHECK(*one.value == RatFun(q1 / q2) * lin(a, 1) / lin(a));
  CHECK(one.forms_agree);
  CHECK(one.tau_free);

  const BerezinianResult triv = berezinian(evaluation_monodromy({0, 0}, a), q1, q2);
  REQUIRE(triv.value.has_value());
  CHECK(*triv.value == RatFun(q1 / q2));

  for (const char* name : {"E2", "T2", "l2"}) {
    const ModuleSpec s = suite_spec(name);
    const BerezinianResult b = berezinian(tensor_monodromy(s), s.q1, s.q2);
    CHECK(b.central);
    CHECK(b.scalar);
    REQUIRE(b.value.has_value());
    CHECK(*b.value == expected_berezinian(s));
  }
}

TEST_CASE("transfer relation on one site, m = 2") {
  const Scalar a = 3, q1 = 2, q2 = 5;
  const std::vector<Scalar> pts{a};
  const MonodromyPencil m = lax_monodromy(pts);
  const OpRat t = transfer(m, q1, q2);
  const RatMatrix prod = to_ratmatrix(t * t.shifted(1));
  const RatFun expected = (RatFun(q1) * lin(a, 1) - RatFun(q2) * lin(a)) *
                          (RatFun(q1) * lin(a) - RatFun(q2) * lin(a, -1)) / (lin(a) * lin(a, -1));
  CHECK(prod(0, 0) == expected);
  const TransferRelationResult r = transfer_relation_check(m, q1, q2, 2, expected_berezinian(make_spec({{1, 0}}, pts, q1, q2)));
  CHECK(r.antisymmetric);
  CHECK(r.symmetric);
}

TEST_CASE("transfer relations up to m = 3") {
  for (const char* name : {"E1", "E2", "T2", "mixed"}) {
    const ModuleSpec s = suite_spec(name);
    const MonodromyPencil m = tensor_monodromy(s);
    for (std::size_t k = 1; k <= 3; ++k) {
      const TransferRelationResult r = transfer_relation_check(m, s.q1, s.q2, k, expected_berezinian(s));
      CHECK(r.antisymmetric);
      CHECK(r.symmetric);
      CHECK(r.h_routes_agree);
    }
  }
}

TEST_CASE("fused transfer matrices commute") {
  const ModuleSpec s = suite_spec("T2");
  const MonodromyPencil m = tensor_monodromy(s);
  const OpRat t1 = fused_transfer_expansion(m, s.q1, s.q2, 1), t2 = fused_transfer_expansion(m, s.q1, s.q2, 2),
              t3 = fused_transfer_expansion(m, s.q1, s.q2, 3);
  CHECK(fused_commute(t1, t2));
  CHECK(fused_commute(t2, t3));
  CHECK(fused_commute(t1, t3));
}

TEST_CASE("difference operator expansion") {
  for (const char* name : {"E1", "E2", "T2"}) {
    const ModuleSpec s = suite_spec(name);
    const DqExpansionResult r = dq_expansion_check(tensor_monodromy(s), s.q1, s.q2, 4);
    CHECK(r.transfer_coefficients);
    CHECK(r.inverse_coefficients);
  }
}

TEST_CASE("oper action on Bethe vectors") {
  OperActionResult r = oper_action_check(test::e1(), make_divisor({-2}), 2);
  CHECK(r.pass);
  CHECK(r.closed_form_matches_series);
  r = oper_action_check(test::e2(), make_divisor({q(-1, 4)}), 3);
  CHECK(r.pass);
  CHECK(oper_factor_action(test::e2(), make_divisor({q(-1, 4)}), expected_berezinian(test::e2())));
  CHECK_THROWS_AS(oper_action_check(test::double_root(), make_divisor({q(-1, 2), q(-1, 2)}), 2), Error);
}

TEST_CASE("universal oper identity") {
  const ModuleSpec s = test::e1();
  const UniversalOperResult r = universal_oper_check(tensor_monodromy(s), s.q1, s.q2, expected_berezinian(s), 3);
  CHECK(r.first_form);
  CHECK(r.second_form);
  const MonodromyPencil triv = evaluation_monodromy({0, 0}, 1);
  CHECK_THROWS_AS(universal_oper_check(triv, 2, 2, RatFun(1), 3), Error);
}

TEST_CASE("difference operator algebra") {
  RatMatrix c(2, 2);
  c(0, 0) = RatFun(Poly{1, 1});
  c(1, 1) = RatFun(2);
  c(0, 1) = RatFun(Poly::x());
  const DiffOp m = DiffOp::monomial(c, 2);
  CHECK(m * m.monomial_inverse() == DiffOp::identity(2));
  CHECK(m.monomial_inverse() * m == DiffOp::identity(2));

  RatMatrix d(2, 2);
  d(1, 0) = RatFun(3);
  const DiffOp op = DiffOp::identity(2) + DiffOp::monomial(d, 1) + DiffOp::monomial(c, 2);
  const DiffOp inv = op.series_inverse(5);
  CHECK((op * inv).truncated(5) == DiffOp::identity(2));
  CHECK((inv * op).truncated(5) == DiffOp::identity(2));
}
