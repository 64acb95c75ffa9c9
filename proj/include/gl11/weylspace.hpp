#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gl11/linalg.hpp"
#include "gl11/monodromy.hpp"

namespace gl11 {

using Monomial = std::vector<unsigned>;

// Sparse polynomial in a fixed number of commuting variables.
class MPoly {
 public:
  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static MPoly constant(std::size_t nvars, const Scalar& c);
  static MPoly variable(std::size_t nvars, std::size_t i);
  static MPoly monomial(const Monomial& m, const Scalar& c = 1);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const;  // total degree, -1 for zero
  const std::map<Monomial, Scalar>& terms() const { return t_; }

  MPoly swapped(std::size_t i, std::size_t j) const;
  // (f - f^{(i,i+1)}) / (z_i - z_{i+1}), exact.
  MPoly divided_difference(std::size_t i) const;
  Scalar operator()(std::span<const Scalar> at) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Scalar& s);
  void add_term(const Monomial& m, const Scalar& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Scalar& s) { return a *= s; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.t_ == b.t_; }

 private:
  std::size_t nvars_;
  std::map<Monomial, Scalar> t_;
};

// Monomial symmetric polynomials m_lambda in n variables, |lambda| = degree.
std::vector<MPoly> symmetric_basis(std::size_t n, std::size_t degree);
MPoly elementary_symmetric_poly(std::size_t n, std::size_t i);
MPoly complete_symmetric_poly(std::size_t n, std::size_t i);

// Element of V (x) C[z_1..z_n], V = (C^{1|1})^{tensor n}; keys are V basis
// indices (lexicographic, leg 1 most significant, bit 1 = v2).
class PolyVector {
 public:
  explicit PolyVector(std::size_t n = 0) : n_(n) {}
  static PolyVector basis(std::size_t n, std::size_t index, const MPoly& p);

  std::size_t n() const { return n_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const;
  const std::map<std::size_t, MPoly>& components() const { return c_; }
  MPoly component(std::size_t index) const;

  void add(std::size_t index, const MPoly& p);
  PolyVector& operator+=(const PolyVector& o);
  PolyVector& operator-=(const PolyVector& o);
  PolyVector& operator*=(const Scalar& s);
  friend PolyVector operator+(PolyVector a, const PolyVector& b) { return a += b; }
  friend PolyVector operator-(PolyVector a, const PolyVector& b) { return a -= b; }
  friend PolyVector operator*(PolyVector a, const Scalar& s) { return a *= s; }
  friend PolyVector operator*(const MPoly& p, const PolyVector& v);
  friend bool operator==(const PolyVector& a, const PolyVector& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  std::size_t n_;
  std::map<std::size_t, MPoly> c_;
};

// Number of v2 factors in a basis index.
std::size_t level_of(std::size_t n, std::size_t index);

// s^_i f = P^{(i,i+1)} f^{swap} + (f - f^{swap}) / (z_i - z_{i+1}), 1 <= i <= n-1.
PolyVector modified_action(std::size_t i, const PolyVector& f);
// s_i f = P^{(i,i+1)} f^{swap}.
PolyVector standard_action(std::size_t i, const PolyVector& f);
// e_ab[r] = sum_s z_s^r e_ab^{(s)} with the Koszul sign of legs before s; a, b in {0, 1}.
PolyVector current_action(int a, int b, unsigned r, const PolyVector& f);

// Random vector of the given level with total degree <= d and small integer coefficients.
PolyVector random_poly_vector(std::size_t n, std::size_t level, std::size_t d, std::uint64_t seed);

// Coefficient list of the generating function up to q^d:
// q^{l(l-1)/2} / ((q)_l (q)_{n-l}), or q^{l(l+1)/2} / ((q)_l (q)_{n-1-l} (1 - q^n)).
// The singular series is zero for l = n.
std::vector<std::size_t> character_series(std::size_t n, std::size_t l, std::size_t d, bool singular);

// dim F_j W / F_{j-1} W for W the invariants of level l (optionally singular),
// under the modified (default) or standard S_n action.
std::vector<std::size_t> invariant_dimensions(std::size_t n, std::size_t l, std::size_t d, bool singular_only,
                                              bool modified = true);

// Filtration-adapted basis of the invariants of level l inside F_d.
std::vector<PolyVector> invariant_basis(std::size_t n, std::size_t l, std::size_t d, bool singular_only,
                                        bool modified = true);

struct SnRelationResult {
  bool involutive = false;
  bool braid = false;
  bool commute_far = false;  // s^_i s^_j = s^_j s^_i for |i - j| > 1
};

SnRelationResult sn_relation_check(std::size_t n, std::size_t d, std::uint64_t seed);

struct CurrentModelResult {
  bool free_generators = false;           // e21[r_1]..e21[r_l] v+ free over symmetric polys, spanning to degree d
  bool relation = false;                  // e21[n] v+ = sum (-1)^{i-1} sigma_i e21[n-i] v+
  bool antisymmetry = false;              // e21[r] e21[s] = -e21[s] e21[r] on v+-descendants
  bool singular_identity = false;         // e12[0] e21[0] w = n w on singular invariants
  bool singular_free_generators = false;  // e12[0] e21[0] e21[r_1].. v+, 1 <= r_1 < .. < r_l <= n-1
  bool pass() const {
    return free_generators && relation && antisymmetry && singular_identity && singular_free_generators;
  }
};

CurrentModelResult current_model_checks(std::size_t n, std::size_t l, std::size_t d);

// L(x) = (x - z_n + P^{(0,n)}) ... (x - z_1 + P^{(0,1)}) with entries L_ij(x)
// stored as coefficient of x^deg -> list of (z-monomial, matrix on V).
class SymbolicLax {
 public:
  explicit SymbolicLax(std::size_t n);
  std::size_t n() const { return n_; }
  // Coefficient of x^deg in L_ij applied to f.
  PolyVector apply(int i, int j, std::size_t deg, const PolyVector& f) const;
  // Yangian generator T_ij^{(r)}, r >= 1, from L_ij(x) / prod (x - z_s).
  PolyVector apply_generator(int i, int j, std::size_t r, const PolyVector& f) const;
  // z -> a gives the monodromy of V(a).
  MonodromyPencil specialize(std::span<const Scalar> a) const;

 private:
  std::size_t n_;
  std::map<std::array<std::size_t, 3>, std::vector<std::pair<Monomial, QMatrix>>> terms_;
};

// Every L_ij coefficient commutes with every s^_i on random vectors of degree <= d.
bool gamma_commutes_check(std::size_t n, std::size_t d, std::uint64_t seed);

struct CyclicityResult {
  bool pass = false;
  std::vector<std::size_t> generated;  // dims of the span from v+ per filtration degree
  std::vector<std::size_t> invariant;  // dims of F_j of the invariants
};

// Span of words in T_ij^{(r)} of filtration degree <= j applied to v+ equals
// F_j of the invariants, j <= d.
CyclicityResult cyclicity_check(std::size_t n, std::size_t d);

struct SpecializationResult {
  bool pass = false;
  std::vector<std::size_t> level_dims;  // quotient dims per level
  bool free = false;                    // products of generators independent to the degree budget
  bool isomorphic = false;              // unique vacuum-preserving intertwiner, invertible
  QMatrix intertwiner;                  // quotient basis -> V(a) basis
};

// V^S / I_a V^S against V(a). Throws "ordering precondition" when a_i = a_j + 1 for some i > j.
SpecializationResult specialization_check(std::span<const Scalar> a);

}  // namespace gl11
