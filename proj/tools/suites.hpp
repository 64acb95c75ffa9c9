#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gl11/bethe.hpp"

namespace gl11::cli {

using Json = nlohmann::ordered_json;

struct VerifyOptions {
  std::size_t max_k = 3;
  std::size_t max_n = 4;
  std::size_t max_m = 3;
  std::size_t degree_cap = 4;
  int tau_order = 3;
  bool inject_sign_bug = false;  // flips T^_21 in the rtt and fusion pencils
};

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  Json data = Json::object();

  bool pass() const;
  const Check* first_failure() const;
};

const std::vector<std::string>& suite_names();
// Throws Error for an unknown name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt);

Json spec_json(const ModuleSpec& spec);
std::string ratfun_string(const RatFun& f);

struct SpectrumReport {
  Json data;
  bool consistent = false;
};

// Levels outside the filter are omitted from both the report and the verdict.
SpectrumReport spectrum_report(const ModuleSpec& spec, std::optional<std::size_t> level);

}  // namespace gl11::cli
