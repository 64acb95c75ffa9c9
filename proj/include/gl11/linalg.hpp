#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "gl11/matrix.hpp"
#include "gl11/poly.hpp"

namespace gl11 {

// Incremental row-echelon basis for sparse rational vectors. Each stored
// vector has a distinct leading index, so insertion reduces in one pass.
class SparseEchelon {
 public:
  using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;  // sorted by index

  // Returns true iff v is independent of the vectors inserted so far.
  bool insert(SparseVec v);
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<std::size_t, SparseVec> rows_;  // leading index -> normalized row
};

SparseEchelon::SparseVec to_sparse(const QVec& v);

// Coordinates of op restricted to the invariant subspace spanned by the
// columns of basis: op * basis = basis * R. Throws if not invariant.
QMatrix restrict_to(const QMatrix& op, const QMatrix& basis);

// Solve basis * c = v; throws if v is outside the column span.
QVec coordinates(const QMatrix& basis, const QVec& v);

bool in_span(const QMatrix& basis, const QVec& v);

// det(x - m), monic.
Poly characteristic_polynomial(const QMatrix& m);

bool commutes(const QMatrix& a, const QMatrix& b);

struct JointEigenspace {
  QMatrix eigenspace;    // columns
  QMatrix generalized;   // columns
};

// Per character (one eigenvalue per op): joint eigenspace and joint
// generalized eigenspace with exponent equal to the space dimension.
// Throws "family not commutative" when two ops fail to commute.
std::vector<JointEigenspace> joint_generalized_eigenspaces(
    std::span<const QMatrix> ops, const std::vector<std::vector<Scalar>>& chars);

struct JointBlock {
  std::vector<Scalar> character;
  QMatrix generalized;
};

struct JointSpectrum {
  std::vector<JointBlock> blocks;
  bool split = true;  // false if some characteristic factor is not linear
};

// Independent oracle: splits the space by rational eigenvalues of each op in
// turn, without any prior knowledge of the characters.
JointSpectrum joint_spectrum(std::span<const QMatrix> ops);

// Dimension of {X : X g = g X for all g} inside End of a dim-dimensional space.
std::size_t commutant_dimension(std::span<const QMatrix> gens, std::size_t dim);

}  // namespace gl11
