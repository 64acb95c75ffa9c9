#include "gl11/catalog.hpp"

namespace gl11 {

ModuleSpec make_spec(std::vector<Weight> weights, std::vector<Scalar> points, Scalar q1, Scalar q2) {
  ModuleSpec s;
  s.weights = std::move(weights);
  s.points = std::move(points);
  s.q1 = std::move(q1);
  s.q2 = std::move(q2);
  return s;
}

std::vector<NamedSpec> suite_specs() {
  const Weight w1{1, 0}, w2{2, 0};
  const Scalar h(1, 2);
  return {
      {"E1", make_spec({w1}, {0}, 2, 1)},
      {"E1b", make_spec({w1}, {0}, 3, 7)},
      {"k1w", make_spec({w2}, {0}, 3, 1)},
      {"E2", make_spec({w1, w1}, {0, h}, 1, 1)},
      {"T2", make_spec({w1, w1}, {0, h}, 1, 6)},
      {"mixed", make_spec({w2, w1}, {0, 5}, 1, 1)},
      {"l2", make_spec({{2, 1}, w1}, {0, 5}, 1, 1)},
      {"DR", make_spec({w1, w1, w1}, {0, h, -h}, 1, 1)},
      {"U3", make_spec({w1, w1, w1}, {0, -7, Scalar(-7, 2)}, 1, 1)},
      {"T3", make_spec({w1, w1, w1}, {0, -8, Scalar(-7, 2)}, 20, 39)},
      {"U3m", make_spec({w2, w1, w1}, {0, Scalar(-3, 2), Scalar(-1, 4)}, 1, 1)},
      {"T3m", make_spec({w2, w1, w1}, {0, -8, -6}, 15, 11)},
      {"LAM", make_spec({{1, 1}, w1, w2}, {0, -3, Scalar(-5, 2)}, 1, 1)},
  };
}

ModuleSpec suite_spec(const std::string& name) {
  for (auto& s : suite_specs())
    if (s.name == name) return s.spec;
  throw Error("unknown suite spec: " + name);
}

std::vector<std::vector<Scalar>> lax_suite_points(std::size_t max_n) {
  const std::vector<Scalar> pool = {0, Scalar(1, 3), -2, 5, Scalar(-7, 4)};
  std::vector<std::vector<Scalar>> out;
  for (std::size_t n = 1; n <= std::min(max_n, pool.size()); ++n) out.emplace_back(pool.begin(), pool.begin() + static_cast<long>(n));
  return out;
}

}  // namespace gl11
