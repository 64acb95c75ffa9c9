#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gl11/monodromy.hpp"

namespace gl11 {

struct CharPair {
  Poly phi, psi, gamma, normalizer;
  RatFun zeta1, zeta2;
};

CharPair char_pair(const ModuleSpec& spec);

struct Divisor {
  Poly y;                                       // monic
  std::vector<std::pair<Scalar, unsigned>> roots;  // distinct roots, descending

  std::size_t degree() const { return static_cast<std::size_t>(y.degree()); }
  unsigned mult(const Scalar& a) const;
  std::vector<Scalar> root_list() const;  // with multiplicity
  bool simple() const;
};

Divisor make_divisor(const std::vector<Scalar>& roots);

// All monic degree-l divisors of gamma. Throws "requires split characteristic
// polynomial" unless gamma is a product of rational linear factors.
std::vector<Divisor> enumerate_divisors(const Poly& gamma, std::size_t l);

enum class Provenance { direct, reordered, eps_limit };

struct BetheVector {
  QVec vec;
  std::vector<Scalar> roots;
  bool normalized = true;
  Provenance provenance = Provenance::direct;

  bool is_zero() const { return is_zero_vec(vec); }
};

// Normalized vector prod_{i<j} (t_j - t_i + 1)^{-1} T^_12(t_1) ... T^_12(t_l)|0>.
BetheVector bethe_vector(const MonodromyPencil& m, std::span<const Scalar> t, bool force_eps = false);
BetheVector bethe_vector(const ModuleSpec& spec, std::span<const Scalar> t, bool force_eps = false);

// y(x-1) gamma(x) / y(x); throws unless y divides gamma.
Poly eigenvalue_pencil(const Divisor& y, const CharPair& cp);
Poly eigenvalue_pencil(const Divisor& y, const ModuleSpec& spec);

struct OnShellResult {
  bool pass = false;
  bool on_shell = false;  // y divides gamma
  bool nonzero = false;
  std::optional<std::size_t> failing_coefficient;
};

// Checks y(x) T^_Q(x) B^ = y(x-1) gamma(x) B^ coefficientwise, which is the
// eigenvalue identity T^_Q B^ = E^ B^ when y divides gamma.
OnShellResult verify_on_shell(const ModuleSpec& spec, const Poly& y);
OnShellResult verify_on_shell(const ModuleSpec& spec, const MonodromyPencil& m, const Poly& y);

// Weight (sum l1 - l, sum l2 + l) of level l.
Weight level_weight(const ModuleSpec& spec, std::size_t l);
// Weight space of level l, or its singular part.
QMatrix level_subspace(const ModuleSpec& spec, const GlModule& g, std::size_t l, bool singular);
// Levels 0..k-1 on singular subspaces when q1 = q2, else 0..k on weight spaces.
std::size_t level_count(const ModuleSpec& spec);

struct DivisorEntry {
  Divisor divisor;
  Poly eigenvalue;
  bool onshell = false;
  bool nonzero = false;
  bool in_eigenspace = false;
  std::size_t eigenspace_dim = 0;
  std::size_t generalized_dim = 0;
};

struct LevelReport {
  std::size_t level = 0;
  bool singular = false;
  std::size_t subspace_dim = 0;
  std::vector<DivisorEntry> divisors;
  std::size_t eigenvector_dim = 0;   // sum of eigenspace dims
  std::size_t generalized_total = 0;
  bool exhausted = false;       // every eigenvector is a multiple of a Bethe vector
  bool diagonalizable = false;
};

struct CompletenessReport {
  ModuleFlags flags;
  bool split = false;
  std::vector<LevelReport> levels;

  bool complete() const;
};

CompletenessReport completeness_report(const ModuleSpec& spec);

// Coefficient matrices of T^_Q restricted to a subspace (degrees 0..k).
std::vector<QMatrix> restricted_transfer_family(const OpPoly& tq, const QMatrix& subspace, std::size_t k);

}  // namespace gl11
