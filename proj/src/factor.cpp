#include "gl11/factor.hpp"

#include <algorithm>
#include <limits>

namespace gl11 {

namespace {

using ZPoly = std::vector<mpz_class>;  // lowest degree first

// Integer polynomial with content 1 and positive leading coefficient that is
// a rational multiple of p.
ZPoly primitive_part(const Poly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  for (const auto& c : p.coeffs()) z.push_back(mpz_class(c.get_num() * (l / c.get_den())));
  mpz_class g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0)
    for (auto& c : z) c /= g;
  if (!z.empty() && z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

mpz_class zeval(const ZPoly& z, const mpz_class& x) {
  mpz_class r = 0;
  for (auto it = z.rbegin(); it != z.rend(); ++it) r = r * x + *it;
  return r;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Monic linear factors x - r for every rational root r of the square-free f.
std::vector<Poly> rational_root_factors(Poly& f) {
  std::vector<Poly> out;
  if (f.degree() >= 1 && is_zero(f.coeff(0))) {
    out.push_back(Poly::x());
    f = Poly::exact_div(f, Poly::x());
  }
  if (f.degree() < 1) return out;
  ZPoly z = primitive_part(f);
  auto ps = positive_divisors(z.front());
  auto qs = positive_divisors(z.back());
  std::vector<Scalar> roots;
  for (const auto& p : ps)
    for (const auto& q : qs)
      for (int s : {1, -1}) {
        Scalar r(mpz_class(s * p), q);
        r.canonicalize();
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        if (is_zero(f(r))) roots.push_back(r);
      }
  for (const auto& r : roots) {
    out.push_back(Poly::linear(r));
    f = Poly::exact_div(f, Poly::linear(r));
  }
  return out;
}

// Kronecker search for a factor of degree d of the primitive integer
// polynomial g; returns a monic rational factor or an empty Poly.
Poly kronecker_factor(const Poly& g, int d) {
  ZPoly z = primitive_part(g);
  // Pick d+1 evaluation points with few divisors.
  std::vector<std::pair<std::size_t, mpz_class>> candidates;
  for (long x = -24; x <= 24; ++x) {
    mpz_class v = zeval(z, mpz_class(x));
    if (v == 0) continue;
    candidates.emplace_back(positive_divisors(v).size(), mpz_class(x));
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  if (candidates.size() < static_cast<std::size_t>(d + 1)) return {};
  std::vector<mpz_class> xs;
  std::vector<std::vector<mpz_class>> divs;
  for (int i = 0; i <= d; ++i) {
    xs.push_back(candidates[static_cast<std::size_t>(i)].second);
    auto pos = positive_divisors(zeval(z, xs.back()));
    std::vector<mpz_class> all;
    for (const auto& p : pos) {
      all.push_back(p);
      all.push_back(-p);
    }
    divs.push_back(std::move(all));
  }
  std::vector<std::size_t> idx(static_cast<std::size_t>(d + 1), 0);
  while (true) {
    // Lagrange interpolation through (xs[i], divs[i][idx[i]]).
    Poly cand;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(d); ++i) {
      Poly basis = Poly::constant(Scalar(divs[i][idx[i]]));
      for (std::size_t j = 0; j <= static_cast<std::size_t>(d); ++j) {
        if (i == j) continue;
        basis *= Poly::linear(Scalar(xs[j]));
        basis *= Scalar(1 / Scalar(xs[i] - xs[j]));
      }
      cand += basis;
    }
    if (cand.degree() == d && sgn(cand.leading()) > 0) {
      bool integral = true;
      for (const auto& c : cand.coeffs())
        if (c.get_den() != 1) integral = false;
      if (integral && Poly::divmod(g, cand).second.is_zero()) return cand.monic();
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == divs[k].size()) idx[k++] = 0;
    if (k == idx.size()) return {};
  }
}

void split_square_free(Poly f, unsigned mult, std::vector<Factor>& out) {
  for (auto& lin : rational_root_factors(f)) out.push_back({lin, mult});
  std::vector<Poly> work{f};
  while (!work.empty()) {
    Poly g = work.back();
    work.pop_back();
    if (g.degree() < 1) continue;
    bool found = false;
    for (int d = 2; 2 * d <= g.degree() && !found; ++d) {
      Poly h = kronecker_factor(g, d);
      if (h.is_zero()) continue;
      work.push_back(h);
      work.push_back(Poly::exact_div(g, h).monic());
      found = true;
    }
    if (!found) out.push_back({g.monic(), mult});
  }
}

}  // namespace

bool Factorization::splits() const {
  return std::all_of(factors.begin(), factors.end(), [](const Factor& f) { return f.poly.degree() == 1; });
}

Poly Factorization::expand() const {
  Poly p = Poly::constant(leading);
  for (const auto& f : factors) p *= f.poly.pow(f.multiplicity);
  return p;
}

Factorization factor_over_rationals(const Poly& p) {
  if (p.is_zero()) throw Error("zero input");
  Factorization out{p.leading(), {}};
  Poly q = p.monic();
  if (q.degree() == 0) return out;
  // Yun's square-free decomposition.
  Poly a = gcd(q, q.derivative());
  Poly b = Poly::exact_div(q, a);
  Poly c = Poly::exact_div(q.derivative(), a);
  Poly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    Poly s = gcd(b, d);
    if (s.degree() > 0) split_square_free(s, i, out.factors);
    b = Poly::exact_div(b, s);
    c = Poly::exact_div(d, s);
    d = c - b.derivative();
    ++i;
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& x, const Factor& y) { return poly_less(x.poly, y.poly); });
  return out;
}

}  // namespace gl11
