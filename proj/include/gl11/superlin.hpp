#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gl11/matrix.hpp"

namespace gl11 {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
inline Parity operator*(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) & static_cast<std::uint8_t>(b));
}
inline int sign(Parity p) { return p == Parity::even ? 1 : -1; }
// Parity of the basis index i in {0, 1} of C^{1|1} (v1 even, v2 odd).
inline Parity index_parity(int i) { return i == 0 ? Parity::even : Parity::odd; }

struct Weight {
  Scalar l1, l2;

  bool nondegenerate() const { return !is_zero(l1 + l2); }
  bool polynomial() const;
  friend bool operator==(const Weight& a, const Weight& b) { return a.l1 == b.l1 && a.l2 == b.l2; }
};

// Homogeneous basis with parities; composite spaces remember their legs and
// use lexicographic multi-index order with the first leg most significant.
class SuperSpace {
 public:
  SuperSpace() = default;
  explicit SuperSpace(std::vector<Parity> parities);

  static SuperSpace tensor(const SuperSpace& a, const SuperSpace& b);
  static SuperSpace vector_power(std::size_t n);  // (C^{1|1})^{tensor n}

  std::size_t dim() const { return parities_.size(); }
  Parity parity(std::size_t i) const { return parities_[i]; }
  const std::vector<Parity>& parities() const { return parities_; }
  const std::vector<std::size_t>& leg_dims() const { return legs_; }
  Parity leg_parity(std::size_t leg, std::size_t idx) const { return leg_parities_[leg][idx]; }
  std::vector<std::size_t> multi_index(std::size_t i) const;
  std::size_t flat_index(const std::vector<std::size_t>& multi) const;
  // "1221"-style label, one digit per leg.
  std::string label(std::size_t i) const;

 private:
  std::vector<Parity> parities_;
  std::vector<std::size_t> legs_;
  std::vector<std::vector<Parity>> leg_parities_;
};

struct SuperOperator {
  QMatrix mat;
  Parity parity = Parity::even;
};

// Throws if the support of m does not respect the declared parity.
SuperOperator make_operator(QMatrix m, const SuperSpace& space, Parity p);
// Throws "parity-inhomogeneous operator" when no single parity fits; the zero
// matrix is reported as even.
Parity infer_parity(const QMatrix& m, const SuperSpace& space);
bool respects_parity(const QMatrix& m, const SuperSpace& space, Parity p);

// Matrix of A (x) B on a (x) b: (A(x)B)(v(x)w) = (-1)^{|B||v|} Av (x) Bw.
template <class T>
Matrix<T> super_kron(const Matrix<T>& a, const SuperSpace& sa, const Matrix<T>& b, Parity pb) {
  const std::size_t db = b.rows();
  Matrix<T> out(a.rows() * db, a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (Field<T>::is_zero(a(i, j))) continue;
      const bool flip = (pb * sa.parity(j)) == Parity::odd;
      for (std::size_t r = 0; r < db; ++r)
        for (std::size_t s = 0; s < b.cols(); ++s) {
          if (Field<T>::is_zero(b(r, s))) continue;
          T v = a(i, j) * b(r, s);
          out(i * db + r, j * b.cols() + s) = flip ? T(-v) : v;
        }
    }
  return out;
}

// Matrix of A_1 (x) ... (x) A_k on the composite space with the given legs.
QMatrix super_tensor(std::span<const SuperOperator> legs, std::span<const SuperSpace> spaces);

QVec koszul_apply(std::span<const SuperOperator> legs, std::span<const SuperSpace> spaces, const QVec& v);

template <class T>
T supertrace(const Matrix<T>& m, const SuperSpace& space) {
  T s = Field<T>::zero();
  for (std::size_t i = 0; i < space.dim(); ++i) {
    if (space.parity(i) == Parity::even)
      s += m(i, i);
    else
      s -= m(i, i);
  }
  return s;
}

// E_ij -> (-1)^{|i||j|+|i|} E_ji.
QMatrix supertranspose(const QMatrix& m, const SuperSpace& space);

// Graded flip of the legs a < b of a composite space.
QMatrix graded_flip(const SuperSpace& space, std::size_t a, std::size_t b);

// gl(1|1) acting on a super space; e[i][j] for i, j in {0, 1}.
struct GlModule {
  SuperSpace space;
  std::array<std::array<QMatrix, 2>, 2> e;
};

// L_lambda with basis v1, v2 = e21 v1; one-dimensional when lambda = (0, 0).
GlModule gl_irrep(const Weight& w);
// Action x (x) 1 + 1 (x) x with Koszul signs.
GlModule gl_tensor(const GlModule& a, const GlModule& b);

struct WeightSpace {
  Weight weight;
  QMatrix basis;  // columns
};

// Throws if the Cartan action is not diagonalizable over Q.
std::vector<WeightSpace> weight_spaces(const GlModule& m);
QMatrix weight_space(const GlModule& m, const Weight& w);
QMatrix singular_subspace(const GlModule& m, const Weight& w);

}  // namespace gl11
