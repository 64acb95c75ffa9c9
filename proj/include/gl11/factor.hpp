#pragma once

#include <vector>

#include "gl11/poly.hpp"

namespace gl11 {

struct Factor {
  Poly poly;  // monic, irreducible over Q
  unsigned multiplicity;
};

struct Factorization {
  Scalar leading;
  std::vector<Factor> factors;  // sorted by poly_less, pairwise distinct

  bool splits() const;  // all factors linear
  Poly expand() const;
};

// Square-free decomposition, rational roots, then Kronecker trial division for
// the remaining factors. Throws "zero input" on the zero polynomial.
Factorization factor_over_rationals(const Poly& p);

}  // namespace gl11
