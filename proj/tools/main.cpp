#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "gl11/scalar.hpp"
#include "spec_io.hpp"
#include "suites.hpp"

namespace {

using gl11::cli::Json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw gl11::Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

int cmd_spectrum(const std::string& spec_path, std::optional<std::size_t> level, const std::string& json_path) {
  const gl11::ModuleSpec spec = gl11::cli::load_spec(spec_path);
  const auto rep = gl11::cli::spectrum_report(spec, level);
  if (json_path.empty())
    std::cout << rep.data.dump(2) << "\n";
  else
    write_json(json_path, rep.data);
  if (!rep.consistent) std::cerr << "spectrum: inconsistent report\n";
  return rep.consistent ? kPass : kFail;
}

int cmd_verify(const std::string& suite, const gl11::cli::VerifyOptions& opt, bool timing,
               const std::string& json_path) {
  std::vector<std::string> names;
  if (suite == "all")
    names = gl11::cli::suite_names();
  else
    names = {suite};
  Json out{{"suites", Json::array()}};
  bool all = true;
  for (const auto& name : names) {
    const auto t0 = std::chrono::steady_clock::now();
    gl11::cli::SuiteReport rep;
    try {
      rep = gl11::cli::run_suite(name, opt);
    } catch (const gl11::Error& e) {
      rep.suite = name;
      rep.checks.push_back({"suite " + name + " aborted", false, e.what()});
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::size_t passed = 0;
    for (const auto& c : rep.checks) passed += c.pass;
    std::cout << name << ": " << (rep.pass() ? "pass" : "FAIL") << " (" << passed << "/" << rep.checks.size() << ")";
    if (timing) std::cout << " " << secs << "s";
    std::cout << "\n";
    if (const auto* f = rep.first_failure()) std::cout << "  first failure: " << f->name << ": " << f->witness << "\n";
    all = all && rep.pass();

    Json checks = Json::array();
    for (const auto& c : rep.checks) {
      Json e{{"name", c.name}, {"pass", c.pass}};
      if (!c.pass) e["witness"] = c.witness;
      checks.push_back(e);
    }
    Json s{{"suite", name}, {"pass", rep.pass()}, {"checks", checks}, {"data", rep.data}};
    if (timing) s["seconds"] = secs;
    out["suites"].push_back(s);
  }
  out["pass"] = all;
  if (!json_path.empty()) write_json(json_path, out);
  return all ? kPass : kFail;
}

int cmd_random_spec(const gl11::cli::RandomSpecOptions& opt, const std::string& out_path) {
  const gl11::ModuleSpec spec = gl11::cli::random_spec(opt);
  const std::string text = gl11::cli::format_spec(
      spec, "seed=" + std::to_string(opt.seed) + " k=" + std::to_string(opt.k) +
                " budget=" + std::to_string(opt.weight_budget) + (opt.split ? " split" : ""));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw gl11::Error("cannot write " + out_path);
    out << text;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact gl(1|1) XXX spin chain toolkit"};
  app.require_subcommand(1);

  std::string spec_path, json_path, suite = "all", out_path;
  std::optional<std::size_t> level;
  gl11::cli::VerifyOptions vopt;
  gl11::cli::RandomSpecOptions ropt;
  bool timing = false;

  auto* spectrum = app.add_subcommand("spectrum", "Bethe spectrum of a module per level");
  spectrum->add_option("--spec", spec_path, "spec file")->required();
  spectrum->add_option("--level", level, "report a single level");
  spectrum->add_option("--json", json_path, "write the report here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"rtt", "bethe", "algebra", "norms", "fusion", "weyl", "all"}));
  verify->add_option("--max-k", vopt.max_k, "tensor factors")->check(CLI::Range(1, 3));
  verify->add_option("--max-n", vopt.max_n, "sites for Lax and Weyl models")->check(CLI::Range(1, 5));
  verify->add_option("--max-m", vopt.max_m, "fusion order")->check(CLI::Range(1, 4));
  verify->add_option("--degree-cap", vopt.degree_cap, "polynomial degree for the Weyl model")->check(CLI::Range(0, 6));
  verify->add_option("--tau-order", vopt.tau_order, "minimum tau order for difference operators")->check(CLI::Range(1, 8));
  verify->add_flag("--inject-sign-bug", vopt.inject_sign_bug, "flip T21 to exercise failure reporting");
  verify->add_flag("--timing", timing, "print wall-clock seconds per suite");
  verify->add_option("--json", json_path, "write the full report here");

  auto* random = app.add_subcommand("random-spec", "Write a deterministic pseudo-random cyclic spec");
  random->add_option("--seed", ropt.seed);
  random->add_option("--k", ropt.k)->check(CLI::Range(1, 4));
  random->add_option("--weight-budget", ropt.weight_budget)->check(CLI::Range(1, 4));
  random->add_flag("--split", ropt.split, "force gamma to split over Q");
  random->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kInput;
  }

  try {
    if (*spectrum) return cmd_spectrum(spec_path, level, json_path);
    if (*verify) return cmd_verify(suite, vopt, timing, json_path);
    return cmd_random_spec(ropt, out_path);
  } catch (const gl11::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}
