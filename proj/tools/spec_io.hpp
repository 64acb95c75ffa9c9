#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "gl11/monodromy.hpp"

namespace gl11::cli {

// Lines key=value with JSON values:
//   weights=[[1,0],[2,1]]
//   points=["0","1/2"]
//   twist=["1","1"]
// Blank lines and lines starting with '#' are skipped. Throws Error on any
// malformed or invalid input.
ModuleSpec parse_spec(std::istream& in);
ModuleSpec load_spec(const std::string& path);

std::string format_spec(const ModuleSpec& spec, const std::string& comment = "");

struct RandomSpecOptions {
  std::uint64_t seed = 1;
  std::size_t k = 2;
  unsigned weight_budget = 2;  // l1 in 1..budget, l2 in 0..l1-1
  bool split = false;          // force gamma to factor into rational linear factors
};

// Deterministic in the options; the result is always cyclic.
ModuleSpec random_spec(const RandomSpecOptions& opt);

}  // namespace gl11::cli
