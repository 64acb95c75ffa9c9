#pragma once

#include <vector>

#include "gl11/catalog.hpp"
#include "gl11/monodromy.hpp"

namespace gl11::test {

inline Scalar q(long p, long d = 1) {
  Scalar s(p, d);
  s.canonicalize();
  return s;
}

inline QVec unit(std::size_t dim, std::size_t i) {
  QVec v(dim, Scalar(0));
  v[i] = 1;
  return v;
}

// True iff p(x) v equals poly(x) v coefficientwise.
inline bool acts_as(const OpPoly& p, const QVec& v, const Poly& poly) {
  const auto img = p.apply(v);
  const std::size_t top = std::max(img.size(), poly.coeffs().size());
  for (std::size_t d = 0; d < top; ++d) {
    const Scalar c = poly.coeff(d);
    for (std::size_t a = 0; a < v.size(); ++a) {
      const Scalar lhs = d < img.size() ? img[d][a] : Scalar(0);
      if (lhs != c * v[a]) return false;
    }
  }
  return true;
}

inline ModuleSpec e1() { return suite_spec("E1"); }
inline ModuleSpec e2() { return suite_spec("E2"); }
inline ModuleSpec double_root() { return suite_spec("DR"); }

}  // namespace gl11::test
