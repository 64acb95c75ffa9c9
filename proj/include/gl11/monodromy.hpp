#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "gl11/oppoly.hpp"
#include "gl11/ratfun.hpp"
#include "gl11/superlin.hpp"

namespace gl11 {

struct ModuleSpec {
  std::vector<Weight> weights;
  std::vector<Scalar> points;
  Scalar q1 = 1, q2 = 1;

  std::size_t k() const { return weights.size(); }
  Scalar n() const;  // sum of l1 + l2 over the legs
  bool untwisted() const { return q1 == q2; }
  // Throws with a message naming the violated condition.
  void validate() const;
};

// T^_ij(x) = prod_s (x - b_s) T_ij(x) as operator pencils on the module space.
struct MonodromyPencil {
  SuperSpace space;
  std::array<std::array<OpPoly, 2>, 2> t;
  Poly normalizer;

  const OpPoly& entry(int i, int j) const { return t[i][j]; }
  std::size_t dim() const { return space.dim(); }
};

inline Parity entry_parity(int i, int j) { return index_parity(i) + index_parity(j); }

MonodromyPencil evaluation_monodromy(const Weight& w, const Scalar& b);
// Coproduct T_ij -> sum_r T_rj (x) T_ir.
MonodromyPencil coproduct(const MonodromyPencil& a, const MonodromyPencil& b);
MonodromyPencil tensor_monodromy(const ModuleSpec& spec);
// L(x) = (x - a_n + P^{0n}) ... (x - a_1 + P^{01}) on (C^{1|1})^{tensor n}.
MonodromyPencil lax_monodromy(std::span<const Scalar> points);

// gl(1|1) action on the same basis as tensor_monodromy.
GlModule module_gl_action(const ModuleSpec& spec);

struct RttWitness {
  int i, j, r, s;
  std::size_t deg_x1, deg_x2;
};

struct RttResult {
  bool pass = true;
  std::optional<RttWitness> witness;
};

// (x1-x2)[T_ij(x1), T_rs(x2)] = sgn (T_rj(x2) T_is(x1) - T_rj(x1) T_is(x2))
// checked coefficientwise for all 16 index choices.
RttResult verify_rtt(const MonodromyPencil& m);

// Each coefficient of T^_ij commutes with the diagonal action in the sense
// [e_rs (x) 1 + 1 (x) e_rs, T(x)] = 0.
bool verify_gl_covariance(const MonodromyPencil& m, const GlModule& g);

OpPoly transfer_pencil(const MonodromyPencil& m, const Scalar& q1, const Scalar& q2);

struct Lambda2Reduction {
  ModuleSpec reduced;
  RatFun xi;  // T on the reduced module = xi * T on the original one
};

Lambda2Reduction reduce_lambda2(const ModuleSpec& spec);

struct ModuleFlags {
  bool cyclic = false;
  bool irreducible = false;
};

ModuleFlags cyclicity_and_irreducibility(const ModuleSpec& spec);

// Union of the strings {b_s, b_s - 1, ..., b_s - l1 + 1}, descending and
// stable; requires every l2 = 0.
std::vector<Scalar> string_points(const ModuleSpec& spec);

// phi = prod (x - b_s + l1), psi = prod (x - b_s - l2), normalizer prod (x - b_s).
Poly drinfeld_phi(const ModuleSpec& spec);
Poly drinfeld_psi(const ModuleSpec& spec);
Poly normalizer(const ModuleSpec& spec);

// Negative control: flips the sign of T^_21.
MonodromyPencil with_flipped_t21(MonodromyPencil m);

}  // namespace gl11
