#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "gl11/factor.hpp"
#include "gl11/bethe.hpp"
#include "spec_io.hpp"

using namespace gl11;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GL11_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_file(const std::string& name, const std::string& text) {
  const std::string path = std::string(GL11_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

ModuleSpec parse(const std::string& text) {
  std::istringstream in(text);
  return cli::parse_spec(in);
}

}  // namespace

TEST_CASE("spec files parse with strings or integers") {
  const ModuleSpec s = parse("# two sites\nweights=[[1,0],[\"2\",\"1\"]]\n\npoints=[\"0\",\"-3/6\"]\ntwist=[\"1\",2]\n");
  CHECK(s.k() == 2);
  CHECK(s.weights[1] == Weight{2, 1});
  CHECK(s.points[1] == Scalar(-1, 2));
  CHECK(s.q2 == 2);
  CHECK(parse(cli::format_spec(s)).points == s.points);
}

TEST_CASE("spec file errors") {
  CHECK_THROWS_AS(parse("weights=[[1,0]]\npoints=[\"0\"]\n"), Error);
  CHECK_THROWS_AS(parse("weights=[[1,0]]\npoints=[\"0\",\"1\"]\ntwist=[1,1]\n"), Error);
  CHECK_THROWS_AS(parse("weights=[[1,0]]\npoints=[\"0\"]\ntwist=[\"0\",\"1\"]\n"), Error);
  CHECK_THROWS_AS(parse("weights=[[1,0]]\npoints=[\"1/x\"]\ntwist=[1,1]\n"), Error);
  CHECK_THROWS_AS(parse("weights=[[1,0]\npoints=[\"0\"]\ntwist=[1,1]\n"), Error);
  CHECK_THROWS_AS(parse("weights=[[1]]\npoints=[\"0\"]\ntwist=[1,1]\n"), Error);
  CHECK_THROWS_AS(parse("weights=[[1,0]]\npoints=[0.5]\ntwist=[1,1]\n"), Error);
  CHECK_THROWS_AS(parse("no equals sign\n"), Error);
}

TEST_CASE("random specs are deterministic and cyclic") {
  cli::RandomSpecOptions opt;
  opt.seed = 1;
  opt.k = 2;
  const ModuleSpec a = cli::random_spec(opt);
  CHECK(cli::format_spec(a) == cli::format_spec(cli::random_spec(opt)));
  CHECK(cyclicity_and_irreducibility(a).cyclic);
  for (std::uint64_t seed = 1; seed <= 6; ++seed)
    for (std::size_t k = 1; k <= 3; ++k) {
      opt.seed = seed;
      opt.k = k;
      opt.split = true;
      const ModuleSpec s = cli::random_spec(opt);
      CHECK(cyclicity_and_irreducibility(s).cyclic);
      CHECK(factor_over_rationals(char_pair(s).gamma).splits());
    }
}

TEST_CASE("spectrum on the two-site chain") {
  const std::string path = write_file("e2.spec", "weights=[[1,0],[1,0]]\npoints=[\"0\",\"1/2\"]\ntwist=[\"1\",\"1\"]\n");
  const Run r = run("spectrum --spec " + path);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["levels"].size() == 2);
  CHECK(j["levels"][0]["divisors"][0]["eigenvalue"] == "2x+1/2");
  CHECK(j["levels"][1]["divisors"][0]["eigenvalue"] == "2x-3/2");
  CHECK(j["consistent"] == true);
  CHECK(run("spectrum --spec " + path).out == r.out);

  const Run one = run("spectrum --spec " + path + " --level 1");
  CHECK(one.code == 0);
  CHECK(nlohmann::json::parse(one.out)["levels"].size() == 1);
}

TEST_CASE("spectrum at the double root") {
  const std::string path =
      write_file("dr.spec", "weights=[[1,0],[1,0],[1,0]]\npoints=[\"0\",\"1/2\",\"-1/2\"]\ntwist=[1,1]\n");
  const Run r = run("spectrum --spec " + path);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  std::vector<int> dims;
  for (const auto& l : j["levels"])
    for (const auto& d : l["divisors"]) dims.push_back(d["generalized_dim"]);
  CHECK(dims == std::vector<int>{1, 2, 1});
}

TEST_CASE("input errors exit with 2") {
  CHECK(run("spectrum --spec " + write_file("zero.spec", "weights=[[1,0]]\npoints=[\"0\"]\ntwist=[\"0\",\"1\"]\n")).code == 2);
  CHECK(run("spectrum --spec " + std::string(GL11_TEST_TMP) + "/missing.spec").code == 2);
  CHECK(run("spectrum --spec " + write_file("short.spec", "weights=[[1,0]]\n")).code == 2);
  CHECK(run("verify --suite nonsense").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("verify suites") {
  Run r = run("verify --suite rtt");
  CHECK(r.code == 0);
  CHECK(r.out.find("rtt: pass") != std::string::npos);
  r = run("verify --suite fusion");
  CHECK(r.code == 0);
  CHECK(r.out.find("fusion: pass") != std::string::npos);

  const std::string json_path = std::string(GL11_TEST_TMP) + "/weyl.json";
  r = run("verify --suite weyl --json " + json_path);
  CHECK(r.code == 0);
  std::ifstream in(json_path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["pass"] == true);
  CHECK(j["suites"][0]["data"]["characters"].size() > 0);
}

TEST_CASE("injected sign bug fails with a witness") {
  const Run r = run("verify --suite all --inject-sign-bug");
  CHECK(r.code == 1);
  CHECK(r.out.find("rtt: FAIL") != std::string::npos);
  CHECK(r.out.find("first failure: rtt") != std::string::npos);
}

TEST_CASE("random-spec output feeds spectrum") {
  const std::string path = std::string(GL11_TEST_TMP) + "/random.spec";
  CHECK(run("random-spec --seed 1 --k 2 --split --out " + path).code == 0);
  CHECK(run("spectrum --spec " + path).code == 0);
  CHECK(run("random-spec --seed 9 --k 3").out == run("random-spec --seed 9 --k 3").out);
}
