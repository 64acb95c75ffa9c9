#include "spec_io.hpp"

#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "gl11/bethe.hpp"
#include "gl11/catalog.hpp"
#include "gl11/factor.hpp"

namespace gl11::cli {

namespace {

using nlohmann::json;

Scalar scalar_field(const json& v, const std::string& where) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<long>());
  throw Error(where + ": expected an integer or a rational string");
}

json scalar_list(const json& v, const std::string& key) {
  if (!v.is_array()) throw Error(key + ": expected a list");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

ModuleSpec parse_spec(std::istream& in) {
  std::map<std::string, json> fields;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error("line " + std::to_string(no) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    try {
      fields[key] = json::parse(line.substr(eq + 1));
    } catch (const json::parse_error&) {
      throw Error("line " + std::to_string(no) + ": malformed value for " + key);
    }
  }
  for (const char* key : {"weights", "points", "twist"})
    if (!fields.count(key)) throw Error(std::string("missing field ") + key);

  ModuleSpec spec;
  for (const auto& w : scalar_list(fields["weights"], "weights")) {
    if (!w.is_array() || w.size() != 2) throw Error("weights: each entry must be a pair");
    spec.weights.push_back({scalar_field(w[0], "weights"), scalar_field(w[1], "weights")});
  }
  for (const auto& p : scalar_list(fields["points"], "points")) spec.points.push_back(scalar_field(p, "points"));
  const json& tw = scalar_list(fields["twist"], "twist");
  if (tw.size() != 2) throw Error("twist: expected two entries");
  spec.q1 = scalar_field(tw[0], "twist");
  spec.q2 = scalar_field(tw[1], "twist");
  if (is_zero(spec.q1) || is_zero(spec.q2)) throw Error("twist: q must be nonzero");
  spec.validate();
  return spec;
}

ModuleSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open spec file " + path);
  return parse_spec(in);
}

std::string format_spec(const ModuleSpec& spec, const std::string& comment) {
  json w = json::array(), p = json::array();
  for (const auto& x : spec.weights) w.push_back({to_string(x.l1), to_string(x.l2)});
  for (const auto& b : spec.points) p.push_back(to_string(b));
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "weights=" << w.dump() << "\n";
  out << "points=" << p.dump() << "\n";
  out << "twist=" << json::array({to_string(spec.q1), to_string(spec.q2)}).dump() << "\n";
  return out.str();
}

ModuleSpec random_spec(const RandomSpecOptions& opt) {
  if (opt.k == 0) throw Error("random spec: k must be positive");
  if (opt.weight_budget == 0) throw Error("random spec: weight budget must be positive");
  // Raw engine output only, so the stream is the same on every standard library.
  std::mt19937_64 rng(opt.seed);
  auto pick = [&](std::uint64_t n) { return static_cast<long>(rng() % n); };
  auto rational = [&]() {
    Scalar q(pick(13) - 6, pick(3) + 1);
    q.canonicalize();
    return q;
  };

  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Weight> weights;
    std::vector<Scalar> points;
    for (std::size_t s = 0; s < opt.k; ++s) {
      const long l1 = 1 + pick(opt.weight_budget);
      weights.push_back({l1, pick(l1)});
      points.push_back(rational());
    }
    Scalar q1 = 1 + pick(5), q2 = 1 + pick(5);
    ModuleSpec spec = make_spec(weights, points, q1, q2);
    if (!cyclicity_and_irreducibility(spec).cyclic) continue;
    if (opt.split) {
      // A chosen root w fixes q2/q1 = phi(w)/psi(w).
      const Scalar w = rational();
      const Scalar phi = drinfeld_phi(spec)(w), psi = drinfeld_psi(spec)(w);
      if (is_zero(phi) || is_zero(psi)) continue;
      spec.q1 = psi;
      spec.q2 = phi;
      if (spec.untwisted()) spec.q1 = spec.q2 = 1;
      try {
        spec.validate();
      } catch (const Error&) {
        continue;
      }
      const Poly gamma = char_pair(spec).gamma;
      if (gamma.is_zero() || !factor_over_rationals(gamma).splits()) continue;
    }
    spec.validate();
    return spec;
  }
  throw Error("random spec: no admissible spec found");
}

}  // namespace gl11::cli
