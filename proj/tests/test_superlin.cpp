#include <doctest.h>

#include "gl11/superlin.hpp"
#include "support.hpp"

using namespace gl11;
using gl11::test::unit;

namespace {

QMatrix e(int i, int j) {
  QMatrix m(2, 2);
  m(i, j) = 1;
  return m;
}

const SuperSpace& c11() {
  static const SuperSpace s = SuperSpace::vector_power(1);
  return s;
}

std::size_t weight_dim(const std::vector<WeightSpace>& ws, const Weight& w) {
  for (const auto& s : ws)
    if (s.weight == w) return s.basis.cols();
  return 0;
}

}  // namespace

TEST_CASE("Koszul signs on two legs") {
  const std::vector<SuperSpace> spaces{c11(), c11()};
  const SuperOperator id{QMatrix::identity(2), Parity::even};
  const SuperOperator e21 = make_operator(e(1, 0), c11(), Parity::odd);
  // v2 (x) v1 is index 2, v2 (x) v2 is index 3.
  const std::vector<SuperOperator> right{id, e21};
  CHECK(koszul_apply(right, spaces, unit(4, 2)) == QVec{0, 0, 0, -1});
  const std::vector<SuperOperator> left{e21, id};
  CHECK(koszul_apply(left, spaces, unit(4, 0)) == unit(4, 2));
  CHECK(super_tensor(right, spaces) * unit(4, 2) == QVec{0, 0, 0, -1});
}

TEST_CASE("coproduct of e12 on v2 (x) v2") {
  const GlModule v = gl_tensor(gl_irrep({1, 0}), gl_irrep({1, 0}));
  CHECK(v.e[0][1] * unit(4, 3) == QVec{0, 1, -1, 0});
}

TEST_CASE("weight space decompositions") {
  const GlModule v2 = gl_tensor(gl_irrep({1, 0}), gl_irrep({1, 0}));
  const auto ws = weight_spaces(v2);
  CHECK(ws.size() == 3);
  CHECK(weight_dim(ws, {2, 0}) == 1);
  CHECK(weight_dim(ws, {1, 1}) == 2);
  CHECK(weight_dim(ws, {0, 2}) == 1);

  const auto w20 = weight_spaces(gl_irrep({2, 0}));
  CHECK(w20.size() == 2);
  CHECK(weight_dim(w20, {2, 0}) == 1);
  CHECK(weight_dim(w20, {1, 1}) == 1);

  const GlModule triv = gl_irrep({0, 0});
  CHECK(triv.space.dim() == 1);
  CHECK(weight_dim(weight_spaces(triv), {0, 0}) == 1);
}

TEST_CASE("singular subspaces") {
  const GlModule v1 = gl_irrep({1, 0});
  const GlModule v2 = gl_tensor(v1, v1);
  CHECK(singular_subspace(v2, {1, 1}).cols() == 1);
  GlModule v = v1;
  for (std::size_t n = 2; n <= 4; ++n) {
    v = gl_tensor(v, v1);
    CHECK(singular_subspace(v, {Scalar(static_cast<long>(n)), 0}).cols() == 1);
  }
  const GlModule v3 = gl_tensor(v2, v1);
  CHECK(singular_subspace(v3, {2, 1}).cols() == 2);
  CHECK(weight_space(v3, {2, 1}).cols() == 3);
}

TEST_CASE("supertrace") {
  CHECK(supertrace(QMatrix::identity(2), c11()) == 0);
  CHECK(supertrace(e(0, 0), c11()) == 1);
  CHECK(supertrace(e(1, 1), c11()) == -1);
  const SuperSpace two = SuperSpace::vector_power(2);
  CHECK(supertrace(graded_flip(two, 0, 1), two) == 0);
}

TEST_CASE("supertranspose") {
  CHECK(supertranspose(e(0, 1), c11()) == e(1, 0));
  CHECK(supertranspose(e(1, 0), c11()) == -e(0, 1));
  const QMatrix a = e(0, 1), b = e(1, 0);
  CHECK(supertranspose(a * b, c11()) == -(supertranspose(b, c11()) * supertranspose(a, c11())));
}

TEST_CASE("graded flips are involutions and swap legs") {
  const SuperSpace three = SuperSpace::vector_power(3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b) {
      const QMatrix p = graded_flip(three, a, b);
      CHECK(p * p == QMatrix::identity(8));
      CHECK(infer_parity(p, three) == Parity::even);
    }
  // v2 (x) v2 picks up a sign under the flip.
  const SuperSpace two = SuperSpace::vector_power(2);
  CHECK(graded_flip(two, 0, 1) * unit(4, 3) == QVec{0, 0, 0, -1});
  CHECK(graded_flip(two, 0, 1) * unit(4, 1) == unit(4, 2));
}

TEST_CASE("parity bookkeeping") {
  CHECK(infer_parity(e(0, 1), c11()) == Parity::odd);
  CHECK(infer_parity(e(0, 0), c11()) == Parity::even);
  CHECK_THROWS_AS(infer_parity(e(0, 0) + e(0, 1), c11()), Error);
  CHECK_THROWS_AS(make_operator(e(0, 1), c11(), Parity::even), Error);
  CHECK(SuperSpace::vector_power(3).label(5) == "212");
}

TEST_CASE("gl(1|1) relations hold on tensor modules") {
  GlModule m = gl_tensor(gl_tensor(gl_irrep({2, 1}), gl_irrep({1, 0})), gl_irrep({3, 0}));
  const auto& g = m.e;
  // [e12, e21] is the supercommutator e11 + e22.
  CHECK(g[0][1] * g[1][0] + g[1][0] * g[0][1] == g[0][0] + g[1][1]);
  CHECK((g[0][1] * g[0][1]).is_zero());
  CHECK((g[1][0] * g[1][0]).is_zero());
  CHECK(g[0][0] * g[1][1] == g[1][1] * g[0][0]);
}
