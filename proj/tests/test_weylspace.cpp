#include <doctest.h>

#include "gl11/weylspace.hpp"
#include "support.hpp"

using namespace gl11;
using gl11::test::q;

namespace {

// Coefficients of prod_i 1/(1 - q^{a_i}) times q^shift up to q^d, by direct series multiplication.
std::vector<std::size_t> product_series(const std::vector<std::size_t>& parts, std::size_t shift, std::size_t d) {
  std::vector<std::size_t> s(d + 1, 0);
  if (shift <= d) s[shift] = 1;
  for (std::size_t a : parts)
    for (std::size_t i = a; i <= d; ++i) s[i] += s[i - a];
  return s;
}

// Counts partitions of j into at most n parts by enumeration.
std::size_t bounded_partitions(std::size_t j, std::size_t n, std::size_t max_part) {
  if (j == 0) return 1;
  if (n == 0) return 0;
  std::size_t c = 0;
  for (std::size_t p = 1; p <= std::min(j, max_part); ++p) c += bounded_partitions(j - p, n - 1, p);
  return c;
}

std::vector<std::size_t> one_to(std::size_t m) {
  std::vector<std::size_t> v;
  for (std::size_t i = 1; i <= m; ++i) v.push_back(i);
  return v;
}

}  // namespace

TEST_CASE("modified action on two sites") {
  const PolyVector c = PolyVector::basis(2, 1, MPoly::constant(2, 1));
  CHECK(modified_action(1, c) == PolyVector::basis(2, 2, MPoly::constant(2, 1)));
  const PolyVector z1 = PolyVector::basis(2, 0, MPoly::variable(2, 0));
  CHECK(modified_action(1, z1) == PolyVector::basis(2, 0, MPoly::variable(2, 1) + MPoly::constant(2, 1)));
}

TEST_CASE("S_n relations of the modified action") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::uint64_t seed : {1u, 2u}) {
      const SnRelationResult r = sn_relation_check(n, 3, seed);
      CHECK(r.involutive);
      CHECK(r.braid);
      CHECK(r.commute_far);
    }
}

TEST_CASE("divided differences") {
  const MPoly z1 = MPoly::variable(2, 0), z2 = MPoly::variable(2, 1);
  CHECK(z1.divided_difference(0) == MPoly::constant(2, 1));
  CHECK((z1 * z1).divided_difference(0) == z1 + z2);
  const MPoly sym = z1 * z2 + z1 + z2;
  CHECK(sym.divided_difference(0).is_zero());
}

TEST_CASE("symmetric polynomial bases") {
  CHECK(symmetric_basis(2, 3).size() == 2);
  CHECK(symmetric_basis(3, 4).size() == 4);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      const MPoly e = elementary_symmetric_poly(n, i);
      for (std::size_t k = 0; k + 1 < n; ++k) CHECK(e.swapped(k, k + 1) == e);
    }
  // h_2(z1, z2) = z1^2 + z1 z2 + z2^2.
  const MPoly z1 = MPoly::variable(2, 0), z2 = MPoly::variable(2, 1);
  CHECK(complete_symmetric_poly(2, 2) == z1 * z1 + z1 * z2 + z2 * z2);
}

TEST_CASE("invariant dimensions on two sites") {
  CHECK(invariant_dimensions(2, 1, 3, false) == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(invariant_dimensions(2, 1, 3, true) == std::vector<std::size_t>{0, 1, 1, 2});
}

TEST_CASE("level zero invariants count partitions with bounded length") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto dims = invariant_dimensions(n, 0, 4, false);
    for (std::size_t j = 0; j <= 4; ++j) CHECK(dims[j] == bounded_partitions(j, n, j));
  }
}

TEST_CASE("invariant dimensions match the generating functions") {
  const std::size_t d = 4;
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t l = 0; l <= n; ++l) {
      CAPTURE(n);
      CAPTURE(l);
      // q^{l(l-1)/2} / ((q)_l (q)_{n-l})
      std::vector<std::size_t> parts = one_to(l), rest = one_to(n - l);
      parts.insert(parts.end(), rest.begin(), rest.end());
      const auto plain = product_series(parts, l * (l - 1) / 2, d);
      CHECK(invariant_dimensions(n, l, d, false) == plain);
      CHECK(invariant_dimensions(n, l, d, false, false) == plain);
      CHECK(character_series(n, l, d, false) == plain);

      // q^{l(l+1)/2} / ((q)_l (q)_{n-1-l} (1 - q^n)), zero for l = n.
      std::vector<std::size_t> sing(d + 1, 0);
      if (l < n) {
        std::vector<std::size_t> sp = one_to(l), sr = one_to(n - 1 - l);
        sp.insert(sp.end(), sr.begin(), sr.end());
        sp.push_back(n);
        sing = product_series(sp, l * (l + 1) / 2, d);
      }
      CHECK(invariant_dimensions(n, l, d, true) == sing);
      CHECK(character_series(n, l, d, true) == sing);
    }
}

TEST_CASE("current algebra model") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t l = 0; l <= n; ++l) {
      const CurrentModelResult r = current_model_checks(n, l, 4);
      CAPTURE(n);
      CAPTURE(l);
      CHECK(r.free_generators);
      CHECK(r.relation);
      CHECK(r.antisymmetry);
      CHECK(r.singular_identity);
      CHECK(r.singular_free_generators);
    }
}

TEST_CASE("e21 relation on two sites") {
  // e21[2] v+ = sigma_1 e21[1] v+ - sigma_2 e21[0] v+.
  const PolyVector vac = PolyVector::basis(2, 0, MPoly::constant(2, 1));
  const PolyVector lhs = current_action(1, 0, 2, vac);
  const PolyVector rhs = elementary_symmetric_poly(2, 1) * current_action(1, 0, 1, vac) -
                         elementary_symmetric_poly(2, 2) * current_action(1, 0, 0, vac);
  CHECK(lhs == rhs);
  CHECK_FALSE(current_action(1, 0, 1, vac).is_zero());
}

TEST_CASE("Lax matrix") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const SymbolicLax lax(n);
    const auto pts = lax_suite_points(n).back();
    const MonodromyPencil a = lax.specialize(pts), b = lax_monodromy(pts);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(a.t[i][j] == b.t[i][j]);
    CHECK(gamma_commutes_check(n, 2, 3));
  }
}

TEST_CASE("invariants are generated from the vacuum") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const CyclicityResult r = cyclicity_check(n, 3);
    CHECK(r.pass);
    CHECK(r.generated == r.invariant);
  }
}

TEST_CASE("specialization to tensor products of vector representations") {
  const std::vector<std::vector<Scalar>> points{{0}, {q(1, 2), 0}, {0, q(1, 2)}, {2, 0}, {0, q(1, 3), -2}};
  for (const auto& a : points) {
    const SpecializationResult r = specialization_check(a);
    CHECK(r.pass);
    CHECK(r.free);
    CHECK(r.isomorphic);
    std::size_t total = 0;
    for (auto d : r.level_dims) total += d;
    CHECK(total == (std::size_t{1} << a.size()));
  }
  const std::vector<Scalar> two{q(1, 2), 0};
  CHECK(specialization_check(two).level_dims == std::vector<std::size_t>{1, 2, 1});
  const std::vector<Scalar> bad{0, 1};
  CHECK_THROWS_AS(specialization_check(bad), Error);
}
