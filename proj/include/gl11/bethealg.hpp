#pragma once

#include <optional>
#include <vector>

#include "gl11/bethe.hpp"

namespace gl11 {

// Generators B_1..B_n and the central scalars C_1..C_n restricted to a level
// subspace. Computed on the lambda2-reduced module, which has the same vectors
// and an algebra generated by the same coefficients.
struct CoefficientFamily {
  ModuleSpec reduced;
  std::size_t level = 0;
  bool singular = false;
  std::size_t n = 0;
  QMatrix subspace;            // columns, in the module basis
  std::vector<QMatrix> b;      // B_1..B_n on subspace coordinates
  std::vector<Scalar> c;       // C_i = sigma_i(string points)
  Poly a_poly;                 // x^n + sum (-1)^i C_i x^{n-i}
};

// B_i is the coefficient of x^{n-i} in A(x) T_Q(x). Untwisted specs require
// singular_only; levels beyond level_count are rejected.
CoefficientFamily coefficient_family(const ModuleSpec& spec, std::size_t level, bool singular_only);

// Scalars by which B_1..B_n act on an eigenvector with normalized eigenvalue E^.
std::vector<Scalar> b_character(const CoefficientFamily& fam, const Poly& eigenvalue);

struct AlgebraImage {
  std::vector<QMatrix> basis;
  std::size_t dimension() const { return basis.size(); }
};

// Unital algebra generated by the family, by span saturation under
// multiplication with the generators.
AlgebraImage algebra_image(const CoefficientFamily& fam);

bool family_commutes(const CoefficientFamily& fam);

struct RegularRepResult {
  bool pass = false;
  std::size_t algebra_dim = 0;
  std::size_t subspace_dim = 0;
  std::optional<QVec> cyclic_vector;  // subspace coordinates
};

// A vector v in span(space_basis) with algebra * v = span(space_basis). Tries the
// basis columns, then the moment-curve combinations sum c^j col_j for c = 1..d^2 + 1.
std::optional<QVec> find_cyclic_vector(const std::vector<QMatrix>& algebra, const QMatrix& space_basis);
RegularRepResult regular_rep_check(const CoefficientFamily& fam, const AlgebraImage& alg);

// Commutant of the algebra inside End of the subspace equals the algebra.
bool maximal_commutative(const CoefficientFamily& fam, const AlgebraImage& alg);

struct PresentationEntry {
  Divisor divisor;
  Poly presented;   // lead * prod_{i<=l}(x - w_i - 1) prod_{j>l}(x - w_j)
  Poly eigenvalue;  // E^
  bool matches_eigenvalue = false;
  bool found_in_spectrum = false;  // character present in the independent oracle
};

struct PresentationResult {
  bool pass = false;
  bool eps_identity = false;  // gamma = lead * (x^d + sum (-1)^i eps_i x^{d-i}), eps_i = sigma_i(w)
  std::vector<Scalar> eps;
  std::size_t quotient_dim = 0;  // C(deg gamma, l)
  std::vector<PresentationEntry> entries;
};

PresentationResult presentation_check(const ModuleSpec& spec, std::size_t level);

struct SpectralEntry {
  Divisor divisor;
  std::size_t eigenspace_dim = 0;
  std::size_t generalized_dim = 0;
  std::size_t expected_generalized_dim = 0;  // prod_a C(Mult_a gamma, Mult_a y)
  bool cyclic = false;                       // generalized eigenspace cyclic over the algebra
};

struct SpectralResult {
  std::vector<SpectralEntry> entries;
  std::size_t generalized_total = 0;
  bool sums_to_dimension = false;
  bool oracle_agrees = false;  // joint_spectrum block sizes equal the divisor-built ones
};

SpectralResult spectral_analysis(const CoefficientFamily& fam, const AlgebraImage& alg,
                                 const std::vector<Divisor>& divisors, const Poly& gamma);

}  // namespace gl11
