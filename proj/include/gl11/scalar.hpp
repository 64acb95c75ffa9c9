#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gl11 {

// Exact rational; mpq_class keeps the canonical reduced form after every
// arithmetic operation.
using Scalar = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Scalar& s) { return s.get_str(); }

// Accepts "p", "-p", "p/q"; rejects decimals and empty input.
Scalar parse_scalar(std::string_view text);

Scalar binomial(long n, long k);

}  // namespace gl11
