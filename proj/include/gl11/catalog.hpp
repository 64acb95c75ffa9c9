#pragma once

#include <string>
#include <vector>

#include "gl11/monodromy.hpp"

namespace gl11 {

ModuleSpec make_spec(std::vector<Weight> weights, std::vector<Scalar> points, Scalar q1, Scalar q2);

struct NamedSpec {
  std::string name;
  ModuleSpec spec;
};

// Fixed verification suite, k <= 3 and n <= 5. Every gamma splits over Q.
std::vector<NamedSpec> suite_specs();
// Throws "unknown suite spec" for other names.
ModuleSpec suite_spec(const std::string& name);

// Points for the Lax model, one list per n = 1..max_n.
std::vector<std::vector<Scalar>> lax_suite_points(std::size_t max_n);

}  // namespace gl11
