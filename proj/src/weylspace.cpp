#include "gl11/weylspace.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace gl11 {

namespace {

std::size_t bit_of_leg(std::size_t n, std::size_t leg) { return n - leg; }  // leg is 1-based

bool leg_is_odd(std::size_t n, std::size_t index, std::size_t leg) { return (index >> bit_of_leg(n, leg)) & 1U; }

std::size_t odd_before(std::size_t n, std::size_t index, std::size_t leg) {
  std::size_t c = 0;
  for (std::size_t t = 1; t < leg; ++t) c += leg_is_odd(n, index, t);
  return c;
}

// Monomials of total degree exactly d in n variables, lexicographically descending.
void monomials_of_degree(std::size_t n, std::size_t d, Monomial& cur, std::size_t pos, std::vector<Monomial>& out) {
  if (pos + 1 == n) {
    cur[pos] = static_cast<unsigned>(d);
    out.push_back(cur);
    return;
  }
  for (std::size_t e = d + 1; e-- > 0;) {
    cur[pos] = static_cast<unsigned>(e);
    monomials_of_degree(n, d - e, cur, pos + 1, out);
  }
}

std::vector<Monomial> monomials_of_degree(std::size_t n, std::size_t d) {
  std::vector<Monomial> out;
  if (n == 0) return out;
  Monomial cur(n, 0);
  monomials_of_degree(n, d, cur, 0, out);
  return out;
}

void partitions(std::size_t total, std::size_t max_part, std::size_t max_len, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (std::size_t p = std::min(total, max_part); p >= 1; --p) {
    cur.push_back(static_cast<unsigned>(p));
    partitions(total - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::size_t> level_indices(std::size_t n, std::size_t l) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < (std::size_t{1} << n); ++i)
    if (level_of(n, i) == l) out.push_back(i);
  return out;
}

// Column coordinates of level-l vectors in F_d, ordered by degree first so that
// rref nullspaces are filtration adapted.
struct Grid {
  std::size_t n;
  std::vector<std::size_t> basis;
  std::vector<Monomial> monos;
  std::vector<std::size_t> mono_degree;
  std::map<std::pair<std::size_t, Monomial>, std::size_t> index;

  Grid(std::size_t n_, std::size_t l, std::size_t d) : n(n_), basis(level_indices(n_, l)) {
    for (std::size_t j = 0; j <= d; ++j)
      for (auto& m : monomials_of_degree(n, j)) {
        monos.push_back(m);
        mono_degree.push_back(j);
      }
    for (std::size_t mi = 0; mi < monos.size(); ++mi)
      for (std::size_t b = 0; b < basis.size(); ++b) index.emplace(std::make_pair(basis[b], monos[mi]), size());
  }
  std::size_t size() const { return index.size(); }
  std::size_t column(std::size_t mi, std::size_t b) const { return mi * basis.size() + b; }
  std::size_t degree_of_column(std::size_t c) const { return mono_degree[c / basis.size()]; }
  PolyVector vector_of_column(std::size_t c) const {
    Monomial m = monos[c / basis.size()];
    return PolyVector::basis(n, basis[c % basis.size()], MPoly::monomial(m));
  }
  PolyVector from_coordinates(const QVec& v) const {
    PolyVector f(n);
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!is_zero(v[c])) f.add(basis[c % basis.size()], MPoly::monomial(monos[c / basis.size()], v[c]));
    return f;
  }
};

// Open-ended coordinates for arbitrary vectors.
class Coords {
 public:
  std::size_t operator()(std::size_t idx, const Monomial& m) {
    auto [it, fresh] = map_.emplace(std::make_pair(idx, m), map_.size());
    (void)fresh;
    return it->second;
  }
  std::size_t size() const { return map_.size(); }
  SparseEchelon::SparseVec sparse(const PolyVector& f) {
    SparseEchelon::SparseVec v;
    for (const auto& [idx, p] : f.components())
      for (const auto& [m, c] : p.terms()) v.emplace_back((*this)(idx, m), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

 private:
  std::map<std::pair<std::size_t, Monomial>, std::size_t> map_;
};

// Images of the columns under the invariance conditions (and e12 when singular).
std::vector<PolyVector> constraint_images(const PolyVector& col, std::size_t n, bool singular, bool modified) {
  std::vector<PolyVector> out;
  for (std::size_t i = 1; i < n; ++i)
    out.push_back((modified ? modified_action(i, col) : standard_action(i, col)) - col);
  if (singular) out.push_back(current_action(0, 1, 0, col));
  return out;
}

SparseEchelon::SparseVec stacked(const std::vector<PolyVector>& parts, std::vector<Coords>& coords) {
  SparseEchelon::SparseVec v;
  std::size_t offset = 0;
  std::vector<SparseEchelon::SparseVec> pieces;
  for (std::size_t k = 0; k < parts.size(); ++k) pieces.push_back(coords[k].sparse(parts[k]));
  // Blocks are separated by a stride larger than any coordinate count used here.
  constexpr std::size_t stride = std::size_t{1} << 40;
  for (auto& p : pieces) {
    for (auto& [i, c] : p) v.emplace_back(offset + i, c);
    offset += stride;
  }
  return v;
}

PolyVector vacuum_vector(std::size_t n) { return PolyVector::basis(n, 0, MPoly::constant(n, 1)); }

PolyVector e21_word(std::size_t n, const std::vector<unsigned>& r) {
  PolyVector v = vacuum_vector(n);
  for (std::size_t i = r.size(); i-- > 0;) v = current_action(1, 0, r[i], v);
  return v;
}

void increasing_tuples(std::size_t len, unsigned lo, unsigned hi, std::vector<unsigned>& cur,
                       std::vector<std::vector<unsigned>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (unsigned r = cur.empty() ? lo : cur.back() + 1; r <= hi; ++r) {
    cur.push_back(r);
    increasing_tuples(len, lo, hi, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<unsigned>> increasing_tuples(std::size_t len, unsigned lo, unsigned hi) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  if (len == 0) return {{}};
  if (hi + 1 < lo + len) return out;
  increasing_tuples(len, lo, hi, cur, out);
  return out;
}

// Products m * g over symmetric m with deg m + deg g <= d are independent and
// as many as the invariant dimensions up to d.
bool free_over_symmetric(std::size_t n, const std::vector<std::pair<PolyVector, std::size_t>>& gens, std::size_t d,
                         std::size_t expected_total) {
  Coords coords;
  SparseEchelon ech;
  std::size_t count = 0;
  for (const auto& [g, deg] : gens)
    for (std::size_t j = deg; j <= d; ++j)
      for (const auto& m : symmetric_basis(n, j - deg)) {
        if (!ech.insert(coords.sparse(m * g))) return false;
        ++count;
      }
  return count == expected_total;
}

bool invariant_under(const PolyVector& v, bool modified) {
  for (std::size_t i = 1; i < v.n(); ++i)
    if (!((modified ? modified_action(i, v) : standard_action(i, v)) == v)) return false;
  return true;
}

QMatrix block(const QMatrix& m, std::size_t i, std::size_t j, std::size_t d) {
  QMatrix b(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) b(r, c) = m(i * d + r, j * d + c);
  return b;
}

Scalar monomial_value(const Monomial& m, std::span<const Scalar> at) {
  Scalar v = 1;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (unsigned e = 0; e < m[i]; ++e) v *= at[i];
  return v;
}

}  // namespace

// ---- MPoly

MPoly MPoly::constant(std::size_t nvars, const Scalar& c) {
  MPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
  Monomial m(nvars, 0);
  m.at(i) = 1;
  return monomial(m);
}

MPoly MPoly::monomial(const Monomial& m, const Scalar& c) {
  MPoly p(m.size());
  p.add_term(m, c);
  return p;
}

int MPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) {
    unsigned s = 0;
    for (auto e : m) s += e;
    d = std::max(d, static_cast<int>(s));
  }
  return d;
}

void MPoly::add_term(const Monomial& m, const Scalar& c) {
  if (gl11::is_zero(c)) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (gl11::is_zero(it->second)) t_.erase(it);
}

MPoly MPoly::swapped(std::size_t i, std::size_t j) const {
  MPoly r(nvars_);
  for (const auto& [m, c] : t_) {
    Monomial s = m;
    std::swap(s[i], s[j]);
    r.add_term(s, c);
  }
  return r;
}

MPoly MPoly::divided_difference(std::size_t i) const {
  MPoly r(nvars_);
  for (const auto& [m, c] : t_) {
    const unsigned a = m[i], b = m[i + 1];
    Monomial s = m;
    if (a > b) {
      for (unsigned k = 0; k < a - b; ++k) {
        s[i] = b + k;
        s[i + 1] = a - 1 - k;
        r.add_term(s, c);
      }
    } else if (a < b) {
      for (unsigned k = 0; k < b - a; ++k) {
        s[i] = a + k;
        s[i + 1] = b - 1 - k;
        r.add_term(s, -c);
      }
    }
  }
  return r;
}

Scalar MPoly::operator()(std::span<const Scalar> at) const {
  Scalar v = 0;
  for (const auto& [m, c] : t_) v += c * monomial_value(m, at);
  return v;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Scalar& s) {
  if (gl11::is_zero(s)) {
    t_.clear();
    return *this;
  }
  for (auto& [m, c] : t_) c *= s;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      Monomial m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

std::vector<MPoly> symmetric_basis(std::size_t n, std::size_t degree) {
  std::vector<std::vector<unsigned>> parts;
  std::vector<unsigned> cur;
  partitions(degree, degree, n, cur, parts);
  std::vector<MPoly> out;
  for (auto& lambda : parts) {
    Monomial m(n, 0);
    std::copy(lambda.begin(), lambda.end(), m.begin());
    std::sort(m.begin(), m.end());
    MPoly p(n);
    do p.add_term(m, 1);
    while (std::next_permutation(m.begin(), m.end()));
    out.push_back(std::move(p));
  }
  return out;
}

MPoly elementary_symmetric_poly(std::size_t n, std::size_t i) {
  if (i > n) return MPoly(n);
  Monomial m(n, 0);
  std::fill(m.end() - static_cast<long>(i), m.end(), 1U);
  MPoly p(n);
  do p.add_term(m, 1);
  while (std::next_permutation(m.begin(), m.end()));
  return p;
}

MPoly complete_symmetric_poly(std::size_t n, std::size_t i) {
  MPoly p(n);
  for (const auto& m : monomials_of_degree(n, i)) p.add_term(m, 1);
  return p;
}

// ---- PolyVector

PolyVector PolyVector::basis(std::size_t n, std::size_t index, const MPoly& p) {
  PolyVector v(n);
  v.add(index, p);
  return v;
}

int PolyVector::degree() const {
  int d = -1;
  for (const auto& [i, p] : c_) d = std::max(d, p.degree());
  return d;
}

MPoly PolyVector::component(std::size_t index) const {
  auto it = c_.find(index);
  return it == c_.end() ? MPoly(n_) : it->second;
}

void PolyVector::add(std::size_t index, const MPoly& p) {
  if (p.is_zero()) return;
  auto [it, fresh] = c_.emplace(index, p);
  if (fresh) return;
  it->second += p;
  if (it->second.is_zero()) c_.erase(it);
}

PolyVector& PolyVector::operator+=(const PolyVector& o) {
  for (const auto& [i, p] : o.c_) add(i, p);
  return *this;
}

PolyVector& PolyVector::operator-=(const PolyVector& o) {
  for (const auto& [i, p] : o.c_) add(i, p * Scalar(-1));
  return *this;
}

PolyVector& PolyVector::operator*=(const Scalar& s) {
  if (gl11::is_zero(s)) {
    c_.clear();
    return *this;
  }
  for (auto& [i, p] : c_) p *= s;
  return *this;
}

PolyVector operator*(const MPoly& p, const PolyVector& v) {
  PolyVector r(v.n_);
  for (const auto& [i, q] : v.c_) r.add(i, p * q);
  return r;
}

std::size_t level_of(std::size_t n, std::size_t index) {
  (void)n;
  return static_cast<std::size_t>(std::popcount(index));
}

// ---- actions

PolyVector modified_action(std::size_t i, const PolyVector& f) {
  const std::size_t n = f.n();
  if (i < 1 || i >= n) throw Error("modified action: index out of range");
  const std::size_t ba = bit_of_leg(n, i), bb = bit_of_leg(n, i + 1);
  PolyVector r(n);
  for (const auto& [idx, p] : f.components()) {
    const bool oa = (idx >> ba) & 1U, ob = (idx >> bb) & 1U;
    std::size_t flipped = idx & ~((std::size_t{1} << ba) | (std::size_t{1} << bb));
    flipped |= (static_cast<std::size_t>(ob) << ba) | (static_cast<std::size_t>(oa) << bb);
    MPoly sw = p.swapped(i - 1, i);
    if (oa && ob) sw *= Scalar(-1);
    r.add(flipped, sw);
    r.add(idx, p.divided_difference(i - 1));
  }
  return r;
}

PolyVector standard_action(std::size_t i, const PolyVector& f) {
  const std::size_t n = f.n();
  if (i < 1 || i >= n) throw Error("standard action: index out of range");
  const std::size_t ba = bit_of_leg(n, i), bb = bit_of_leg(n, i + 1);
  PolyVector r(n);
  for (const auto& [idx, p] : f.components()) {
    const bool oa = (idx >> ba) & 1U, ob = (idx >> bb) & 1U;
    std::size_t flipped = idx & ~((std::size_t{1} << ba) | (std::size_t{1} << bb));
    flipped |= (static_cast<std::size_t>(ob) << ba) | (static_cast<std::size_t>(oa) << bb);
    MPoly sw = p.swapped(i - 1, i);
    if (oa && ob) sw *= Scalar(-1);
    r.add(flipped, sw);
  }
  return r;
}

PolyVector current_action(int a, int b, unsigned r, const PolyVector& f) {
  const std::size_t n = f.n();
  const bool odd = a != b;
  PolyVector out(n);
  for (const auto& [idx, p] : f.components())
    for (std::size_t s = 1; s <= n; ++s) {
      if (static_cast<int>(leg_is_odd(n, idx, s)) != b) continue;
      std::size_t target = idx & ~(std::size_t{1} << bit_of_leg(n, s));
      target |= static_cast<std::size_t>(a) << bit_of_leg(n, s);
      Monomial m(n, 0);
      m[s - 1] = r;
      MPoly q = MPoly::monomial(m) * p;
      if (odd && odd_before(n, idx, s) % 2 == 1) q *= Scalar(-1);
      out.add(target, q);
    }
  return out;
}

PolyVector random_poly_vector(std::size_t n, std::size_t level, std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> keep(0, 2);
  PolyVector v(n);
  for (auto idx : level_indices(n, level))
    for (std::size_t j = 0; j <= d; ++j)
      for (const auto& m : monomials_of_degree(n, j))
        if (keep(rng) == 0) v.add(idx, MPoly::monomial(m, Scalar(coeff(rng))));
  return v;
}

// ---- characters and invariants

std::vector<std::size_t> character_series(std::size_t n, std::size_t l, std::size_t d, bool singular) {
  std::vector<std::size_t> s(d + 1, 0);
  if (l > n || (singular && l >= n)) return s;
  const std::size_t shift = singular ? l * (l + 1) / 2 : l * (l - 1) / 2;
  if (shift <= d) s[shift] = 1;
  auto divide = [&](std::size_t step) {
    for (std::size_t k = step; k <= d; ++k) s[k] += s[k - step];
  };
  for (std::size_t i = 1; i <= l; ++i) divide(i);
  const std::size_t rest = singular ? n - 1 - l : n - l;
  for (std::size_t i = 1; i <= rest; ++i) divide(i);
  if (singular) divide(n);
  return s;
}

std::vector<std::size_t> invariant_dimensions(std::size_t n, std::size_t l, std::size_t d, bool singular_only,
                                              bool modified) {
  if (l > n) throw Error("invalid weight: level out of range");
  const Grid g(n, l, d);
  std::vector<Coords> coords(n);
  SparseEchelon ech;
  std::vector<std::size_t> cumulative(d + 1, 0);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < g.size(); ++c) {
    const auto images = constraint_images(g.vector_of_column(c), n, singular_only, modified);
    if (ech.insert(stacked(images, coords))) ++rank;
    const std::size_t deg = g.degree_of_column(c);
    if (c + 1 == g.size() || g.degree_of_column(c + 1) != deg) cumulative[deg] = (c + 1) - rank;
  }
  std::vector<std::size_t> dims(d + 1);
  for (std::size_t j = 0; j <= d; ++j) dims[j] = cumulative[j] - (j == 0 ? 0 : cumulative[j - 1]);
  return dims;
}

std::vector<PolyVector> invariant_basis(std::size_t n, std::size_t l, std::size_t d, bool singular_only,
                                        bool modified) {
  if (l > n) throw Error("invalid weight: level out of range");
  const Grid g(n, l, d);
  std::vector<Coords> coords(n);
  std::vector<SparseEchelon::SparseVec> cols;
  std::map<std::size_t, std::size_t> rows;
  for (std::size_t c = 0; c < g.size(); ++c) {
    cols.push_back(stacked(constraint_images(g.vector_of_column(c), n, singular_only, modified), coords));
    for (const auto& [r, v] : cols.back()) rows.emplace(r, rows.size());
  }
  QMatrix a(std::max<std::size_t>(rows.size(), 1), g.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) a(rows.at(r), c) = v;
  const QMatrix ns = nullspace(a);
  std::vector<PolyVector> out;
  for (std::size_t j = 0; j < ns.cols(); ++j) out.push_back(g.from_coordinates(ns.column(j)));
  std::stable_sort(out.begin(), out.end(), [](const PolyVector& x, const PolyVector& y) { return x.degree() < y.degree(); });
  return out;
}

SnRelationResult sn_relation_check(std::size_t n, std::size_t d, std::uint64_t seed) {
  SnRelationResult r{true, true, true};
  for (std::size_t l = 0; l <= n; ++l) {
    const PolyVector f = random_poly_vector(n, l, d, seed + l);
    for (std::size_t i = 1; i < n; ++i) {
      if (!(modified_action(i, modified_action(i, f)) == f)) r.involutive = false;
      if (i + 1 < n) {
        const PolyVector lhs = modified_action(i, modified_action(i + 1, modified_action(i, f)));
        const PolyVector rhs = modified_action(i + 1, modified_action(i, modified_action(i + 1, f)));
        if (!(lhs == rhs)) r.braid = false;
      }
      for (std::size_t j = i + 2; j < n; ++j)
        if (!(modified_action(i, modified_action(j, f)) == modified_action(j, modified_action(i, f))))
          r.commute_far = false;
    }
  }
  return r;
}

CurrentModelResult current_model_checks(std::size_t n, std::size_t l, std::size_t d) {
  if (l > n) throw Error("invalid weight: level out of range");
  CurrentModelResult res;
  auto total = [](const std::vector<std::size_t>& v) {
    std::size_t s = 0;
    for (auto x : v) s += x;
    return s;
  };

  std::vector<std::pair<PolyVector, std::size_t>> gens;
  bool invariant = true;
  for (const auto& r : increasing_tuples(l, 0, static_cast<unsigned>(n - 1))) {
    std::size_t deg = 0;
    for (auto x : r) deg += x;
    gens.emplace_back(e21_word(n, r), deg);
    invariant = invariant && invariant_under(gens.back().first, false);
  }
  res.free_generators = invariant && free_over_symmetric(n, gens, d, total(invariant_dimensions(n, l, d, false, false)));

  PolyVector rhs(n);
  for (std::size_t i = 1; i <= n; ++i) {
    PolyVector t = elementary_symmetric_poly(n, i) * e21_word(n, {static_cast<unsigned>(n - i)});
    if (i % 2 == 0) t *= Scalar(-1);
    rhs += t;
  }
  res.relation = e21_word(n, {static_cast<unsigned>(n)}) == rhs;

  res.antisymmetry = true;
  for (std::size_t lev = 0; lev <= n; ++lev) {
    const PolyVector f = random_poly_vector(n, lev, 1, 7 + lev);
    for (unsigned r = 0; r <= n; ++r)
      for (unsigned s = 0; s <= n; ++s) {
        const PolyVector a = current_action(1, 0, r, current_action(1, 0, s, f));
        const PolyVector b = current_action(1, 0, s, current_action(1, 0, r, f));
        if (!((a + b).is_zero())) res.antisymmetry = false;
      }
  }

  res.singular_identity = true;
  for (const auto& w : invariant_basis(n, l, d, true, false)) {
    const PolyVector lhs = current_action(0, 1, 0, current_action(1, 0, 0, w));
    if (!(lhs == w * Scalar(static_cast<long>(n)))) res.singular_identity = false;
  }

  std::vector<std::pair<PolyVector, std::size_t>> sing;
  bool sing_invariant = true;
  if (l < n)
    for (const auto& r : increasing_tuples(l, 1, static_cast<unsigned>(n - 1))) {
      std::vector<unsigned> word{0};
      word.insert(word.end(), r.begin(), r.end());
      std::size_t deg = 0;
      for (auto x : r) deg += x;
      PolyVector h = current_action(0, 1, 0, e21_word(n, word));
      sing_invariant = sing_invariant && invariant_under(h, false) && current_action(0, 1, 0, h).is_zero();
      sing.emplace_back(std::move(h), deg);
    }
  res.singular_free_generators =
      sing_invariant && free_over_symmetric(n, sing, d, total(invariant_dimensions(n, l, d, true, false)));
  return res;
}

// ---- symbolic Lax operator

SymbolicLax::SymbolicLax(std::size_t n) : n_(n) {
  if (n == 0) throw Error("lax model needs at least one site");
  const SuperSpace big = SuperSpace::vector_power(n + 1);
  const std::size_t dbig = big.dim(), d = dbig / 2;
  // Variables z_1..z_n then x.
  std::map<Monomial, QMatrix> l;
  l.emplace(Monomial(n + 1, 0), QMatrix::identity(dbig));
  for (std::size_t s = n; s >= 1; --s) {
    Monomial mx(n + 1, 0), mz(n + 1, 0), m1(n + 1, 0);
    mx[n] = 1;
    mz[s - 1] = 1;
    const std::vector<std::pair<Monomial, QMatrix>> factor = {
        {mx, QMatrix::identity(dbig)}, {mz, QMatrix::identity(dbig) * Scalar(-1)}, {m1, graded_flip(big, 0, s)}};
    std::map<Monomial, QMatrix> next;
    for (const auto& [m, a] : l)
      for (const auto& [fm, b] : factor) {
        Monomial k = m;
        for (std::size_t i = 0; i <= n; ++i) k[i] += fm[i];
        const QMatrix prod = a * b;
        auto it = next.find(k);
        if (it == next.end())
          next.emplace(k, prod);
        else
          it->second += prod;
      }
    l = std::move(next);
  }
  for (const auto& [m, c] : l)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const Scalar sg = sign(entry_parity(i, j) * index_parity(j));
        const QMatrix b = block(c, static_cast<std::size_t>(i), static_cast<std::size_t>(j), d) * sg;
        if (b.is_zero()) continue;
        terms_[{static_cast<std::size_t>(i), static_cast<std::size_t>(j), m[n]}].emplace_back(
            Monomial(m.begin(), m.begin() + static_cast<long>(n)), b);
      }
}

PolyVector SymbolicLax::apply(int i, int j, std::size_t deg, const PolyVector& f) const {
  PolyVector out(n_);
  auto it = terms_.find({static_cast<std::size_t>(i), static_cast<std::size_t>(j), deg});
  if (it == terms_.end()) return out;
  for (const auto& [zm, b] : it->second) {
    const MPoly mono = MPoly::monomial(zm);
    for (const auto& [idx, p] : f.components()) {
      const MPoly shifted = mono * p;
      for (std::size_t r = 0; r < b.rows(); ++r)
        if (!is_zero(b(r, idx))) out.add(r, shifted * b(r, idx));
    }
  }
  return out;
}

PolyVector SymbolicLax::apply_generator(int i, int j, std::size_t r, const PolyVector& f) const {
  if (r == 0) throw Error("Yangian generators start at r = 1");
  PolyVector out(n_);
  for (std::size_t d = (r >= n_ ? 0 : n_ - r); d <= n_; ++d)
    out += complete_symmetric_poly(n_, r + d - n_) * apply(i, j, d, f);
  return out;
}

MonodromyPencil SymbolicLax::specialize(std::span<const Scalar> a) const {
  if (a.size() != n_) throw Error("specialization: wrong number of points");
  const std::size_t d = std::size_t{1} << n_;
  MonodromyPencil m;
  m.space = SuperSpace::vector_power(n_);
  m.normalizer = Poly::from_roots(std::vector<Scalar>(a.begin(), a.end()));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      std::vector<QMatrix> c(n_ + 1, QMatrix(d, d));
      for (std::size_t deg = 0; deg <= n_; ++deg) {
        auto it = terms_.find({static_cast<std::size_t>(i), static_cast<std::size_t>(j), deg});
        if (it == terms_.end()) continue;
        for (const auto& [zm, b] : it->second) c[deg] += b * monomial_value(zm, a);
      }
      m.t[i][j] = OpPoly(std::move(c), d);
    }
  return m;
}

bool gamma_commutes_check(std::size_t n, std::size_t d, std::uint64_t seed) {
  const SymbolicLax lax(n);
  for (std::size_t l = 0; l <= n; ++l) {
    const PolyVector f = random_poly_vector(n, l, d, seed + 31 * l);
    for (std::size_t s = 1; s < n; ++s)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (std::size_t deg = 0; deg <= n; ++deg)
            if (!(lax.apply(i, j, deg, modified_action(s, f)) == modified_action(s, lax.apply(i, j, deg, f))))
              return false;
  }
  return true;
}

CyclicityResult cyclicity_check(std::size_t n, std::size_t d) {
  const SymbolicLax lax(n);
  CyclicityResult res;
  Coords coords;
  SparseEchelon ech;
  std::vector<PolyVector> found;
  std::vector<std::size_t> upto;  // found.size() after each degree
  bool invariant = true;
  auto offer = [&](const PolyVector& v, std::vector<PolyVector>& queue) {
    if (v.is_zero() || v.degree() > static_cast<int>(d)) return;
    if (ech.insert(coords.sparse(v))) {
      found.push_back(v);
      queue.push_back(v);
      invariant = invariant && invariant_under(v, true);
    }
  };
  for (std::size_t j = 0; j <= d; ++j) {
    std::vector<PolyVector> queue;
    if (j == 0) offer(vacuum_vector(n), queue);
    for (std::size_t r = 2; r <= j + 1; ++r) {
      const std::size_t src = upto[j - (r - 1)];
      for (std::size_t k = 0; k < src; ++k)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) offer(lax.apply_generator(a, b, r, found[k]), queue);
    }
    // Degree-zero generators act within the filtration step; close the span.
    std::vector<PolyVector> pending = queue;
    for (std::size_t k = 0; k < found.size(); ++k) pending.push_back(found[k]);
    while (!pending.empty()) {
      const PolyVector v = pending.back();
      pending.pop_back();
      std::vector<PolyVector> fresh;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) offer(lax.apply_generator(a, b, 1, v), fresh);
      pending.insert(pending.end(), fresh.begin(), fresh.end());
    }
    upto.push_back(found.size());
    res.generated.push_back(found.size());
  }
  std::vector<std::size_t> inv(d + 1, 0);
  for (std::size_t l = 0; l <= n; ++l) {
    const auto dims = invariant_dimensions(n, l, d, false);
    std::size_t acc = 0;
    for (std::size_t j = 0; j <= d; ++j) inv[j] += (acc += dims[j]);
  }
  res.invariant = inv;
  res.pass = invariant && res.generated == res.invariant;
  return res;
}

SpecializationResult specialization_check(std::span<const Scalar> a) {
  const std::size_t n = a.size();
  if (n == 0) throw Error("specialization needs at least one point");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a[i] == a[j] + 1) throw Error("ordering precondition: a_i = a_j + 1 with i > j");

  std::size_t top = 0;
  for (std::size_t l = 0; l <= n; ++l) top = std::max(top, l * (l - (l > 0 ? 1 : 0)) / 2 + l * (n - l));
  const std::size_t budget = top + n;

  SpecializationResult res;
  res.free = true;
  struct Gen {
    PolyVector v;
    std::size_t level, degree;
  };
  std::vector<Gen> gens;
  // Per level: products m * g spanning F_budget, as columns.
  std::vector<std::vector<std::pair<std::size_t, MPoly>>> product_labels(n + 1);  // (gen, m)
  std::vector<std::vector<PolyVector>> products(n + 1);

  for (std::size_t l = 0; l <= n; ++l) {
    const auto inv = invariant_basis(n, l, budget, false);
    Coords coords;
    SparseEchelon ech;
    std::vector<std::size_t> level_gens;
    std::size_t cursor = 0;
    for (std::size_t j = 0; j <= budget; ++j) {
      for (auto gi : level_gens)
        if (gens[gi].degree < j)
          for (const auto& m : symmetric_basis(n, j - gens[gi].degree)) {
            PolyVector p = m * gens[gi].v;
            if (!ech.insert(coords.sparse(p))) res.free = false;
            product_labels[l].emplace_back(gi, m);
            products[l].push_back(std::move(p));
          }
      std::vector<PolyVector> candidates;
      if (l == 0 && j == 0) candidates.push_back(vacuum_vector(n));
      while (cursor < inv.size() && inv[cursor].degree() <= static_cast<int>(j)) candidates.push_back(inv[cursor++]);
      for (auto& c : candidates)
        if (ech.insert(coords.sparse(c))) {
          level_gens.push_back(gens.size());
          gens.push_back({c, l, j});
          product_labels[l].emplace_back(gens.size() - 1, MPoly::constant(n, 1));
          products[l].push_back(c);
        }
    }
    if (ech.rank() != inv.size()) res.free = false;
    res.level_dims.push_back(level_gens.size());
  }

  const std::size_t dim = gens.size();
  const std::size_t vdim = std::size_t{1} << n;
  for (std::size_t l = 0; l <= n; ++l)
    if (res.level_dims[l] != static_cast<std::size_t>(binomial(static_cast<long>(n), static_cast<long>(l)).get_num().get_ui()))
      res.free = false;
  if (!res.free || dim != vdim) return res;

  // Quotient action of each L_ij coefficient in the generator basis.
  const SymbolicLax lax(n);
  std::vector<QMatrix> quotient, target;
  const MonodromyPencil va = lax_monodromy(a);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (std::size_t deg = 0; deg <= n; ++deg) {
        QMatrix m(dim, dim);
        for (std::size_t k = 0; k < dim; ++k) {
          const PolyVector v = lax.apply(i, j, deg, gens[k].v);
          if (v.is_zero()) continue;
          const std::size_t l = level_of(n, v.components().begin()->first);
          Coords coords;
          std::vector<SparseEchelon::SparseVec> cols;
          for (const auto& p : products[l]) cols.push_back(coords.sparse(p));
          const auto rhs = coords.sparse(v);
          QMatrix basis(coords.size(), cols.size());
          for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [r, x] : cols[c]) basis(r, c) = x;
          QVec rv(coords.size(), Scalar(0));
          for (const auto& [r, x] : rhs) rv[r] = x;
          const QVec coef = coordinates(basis, rv);
          for (std::size_t c = 0; c < coef.size(); ++c)
            if (!is_zero(coef[c])) {
              const auto& [g, mono] = product_labels[l][c];
              m(g, k) += coef[c] * mono(a);
            }
        }
        quotient.push_back(std::move(m));
        target.push_back(va.t[i][j].coeff(deg));
      }

  // X quotient = target X, as a linear system in the entries of X.
  const std::size_t unknowns = dim * vdim;
  QMatrix sys(quotient.size() * vdim * dim, unknowns);
  std::size_t row = 0;
  for (std::size_t e = 0; e < quotient.size(); ++e)
    for (std::size_t r = 0; r < vdim; ++r)
      for (std::size_t c = 0; c < dim; ++c, ++row) {
        for (std::size_t k = 0; k < dim; ++k)
          if (!is_zero(quotient[e](k, c))) sys(row, r * dim + k) += quotient[e](k, c);
        for (std::size_t k = 0; k < vdim; ++k)
          if (!is_zero(target[e](r, k))) sys(row, k * dim + c) -= target[e](r, k);
      }
  const QMatrix ns = nullspace(sys);
  if (ns.cols() != 1) return res;
  QMatrix x(vdim, dim);
  for (std::size_t r = 0; r < vdim; ++r)
    for (std::size_t c = 0; c < dim; ++c) x(r, c) = ns(r * dim + c, 0);
  // Vacuum to vacuum, normalized.
  const Scalar v0 = x(0, 0);
  bool vacuum_only = !is_zero(v0);
  for (std::size_t r = 1; r < vdim; ++r) vacuum_only = vacuum_only && is_zero(x(r, 0));
  if (!vacuum_only) return res;
  x *= Scalar(1) / v0;
  res.isomorphic = rank(x) == vdim;
  res.intertwiner = x;
  res.pass = res.free && res.isomorphic;
  return res;
}

}  // namespace gl11
