#include "generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace confalg::testing {

Rational Rng::rational(long span) {
  Rational r(integer(-span, span), integer(1, 3));
  r.canonicalize();
  return r;
}

SuperSpace make_space(const std::vector<std::pair<std::string, Parity>>& basis, std::vector<std::string> params) {
  std::vector<BasisVector> vectors;
  for (const auto& [name, parity] : basis) vectors.push_back({name, parity});
  return SuperSpace(std::move(vectors), std::move(params));
}

SuperSpace random_space(Rng& rng, std::size_t dim) {
  std::vector<BasisVector> vectors;
  for (std::size_t i = 0; i < dim; ++i) {
    vectors.push_back({"e" + std::to_string(i + 1), rng.coin() ? Parity::Odd : Parity::Even});
  }
  return SuperSpace(std::move(vectors));
}

Scalar random_scalar(Rng& rng, std::size_t arity, std::size_t max_terms, unsigned max_exponent) {
  Scalar s = Scalar::zero(arity);
  const std::size_t terms = rng.index(max_terms + 1);
  for (std::size_t t = 0; t < terms; ++t) {
    Scalar monomial = Scalar::constant(rng.rational(), arity);
    for (std::size_t v = 0; v < arity; ++v) {
      monomial *= Scalar::variable(v, arity).pow(static_cast<unsigned>(rng.integer(0, max_exponent)));
    }
    s += monomial;
  }
  return s;
}

GradedBilinearMap random_map(Rng& rng, const SuperSpace& space, double density, long span) {
  GradedBilinearMap map(space);
  for (std::size_t i = 0; i < space.dim(); ++i)
    for (std::size_t j = 0; j < space.dim(); ++j)
      for (std::size_t k : map.admissible_targets(i, j)) {
        if (rng.coin(density)) map.set(i, j, k, Scalar(rng.integer(-span, span)));
      }
  return map;
}

LambdaBracket random_lambda_bracket(Rng& rng, const SuperSpace& space, unsigned max_degree, double density) {
  LambdaBracket out(space);
  const GradedBilinearMap shape(space);
  for (std::size_t i = 0; i < space.dim(); ++i)
    for (std::size_t j = 0; j < space.dim(); ++j) {
      VPoly value;
      for (std::size_t k : shape.admissible_targets(i, j)) {
        if (!rng.coin(density)) continue;
        SymbolPoly coefficient;
        for (unsigned dd = 0; dd <= max_degree; ++dd)
          for (unsigned ll = 0; dd + ll <= max_degree; ++ll) {
            if (!rng.coin(0.4)) continue;
            SymbolExponents e{};
            e[static_cast<std::size_t>(Symbol::D)] = static_cast<std::uint16_t>(dd);
            e[static_cast<std::size_t>(Symbol::Lambda)] = static_cast<std::uint16_t>(ll);
            coefficient += SymbolPoly::monomial(e, Scalar(rng.integer(-2, 2)));
          }
        value += VPoly::term(k, coefficient);
      }
      out.set(i, j, value);
    }
  return out;
}

bool mutate(Rng& rng, GradedBilinearMap& map) {
  std::vector<std::array<std::size_t, 3>> slots;
  for (std::size_t i = 0; i < map.dim(); ++i)
    for (std::size_t j = 0; j < map.dim(); ++j)
      for (std::size_t k : map.admissible_targets(i, j)) slots.push_back({i, j, k});
  if (slots.empty()) return false;
  const auto [i, j, k] = slots[rng.index(slots.size())];
  long delta = 0;
  while (delta == 0) delta = rng.integer(-2, 2);
  map.set(i, j, k, map.constant(i, j, k) + Scalar(delta));
  return true;
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

std::optional<Matrix> invert(Matrix m) {
  const std::size_t n = m.size();
  Matrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Vec times(const Matrix& m, const Vec& v) {
  Vec out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) {
      if (m[i][j] != 0) out[i] += Scalar(m[i][j]) * v[j];
    }
  return out;
}

}  // namespace

BasisChange random_basis_change(Rng& rng, const SuperSpace& space) {
  const std::size_t n = space.dim();
  while (true) {
    Matrix g(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (space.parity(i) == space.parity(j)) g[i][j] = rng.integer(-2, 2);
      }
    if (auto inv = invert(g)) return {g, *inv};
  }
}

GradedBilinearMap transform(const GradedBilinearMap& map, const BasisChange& change) {
  const std::size_t n = map.dim();
  std::vector<Vec> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(times(change.g, Vec::basis(n, i)));
  GradedBilinearMap out(map.space());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, times(change.inverse, map.apply(images[i], images[j])));
  return out;
}

QuadraticData transform(const QuadraticData& q, const BasisChange& change) {
  QuadraticData out = q;
  out.circ = transform(q.circ, change);
  out.star = transform(q.star, change);
  out.bracket = transform(q.bracket, change);
  return out;
}

SuperSpace direct_sum(const SuperSpace& a, const SuperSpace& b) {
  std::vector<BasisVector> vectors;
  for (const auto& v : a.basis()) vectors.push_back({"e" + std::to_string(vectors.size() + 1), v.parity});
  for (const auto& v : b.basis()) vectors.push_back({"e" + std::to_string(vectors.size() + 1), v.parity});
  return SuperSpace(std::move(vectors));
}

GradedBilinearMap direct_sum(const GradedBilinearMap& a, const GradedBilinearMap& b, const SuperSpace& target) {
  GradedBilinearMap out(target);
  const std::size_t shift = a.dim();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (!a.constant(i, j, k).is_zero()) out.set(i, j, k, a.constant(i, j, k));
      }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k) {
        if (!b.constant(i, j, k).is_zero()) out.set(i + shift, j + shift, k + shift, b.constant(i, j, k));
      }
  return out;
}

QuadraticData direct_sum(const QuadraticData& a, const QuadraticData& b) {
  const SuperSpace space = direct_sum(a.space(), b.space());
  QuadraticData out;
  out.mode = a.mode;
  out.circ = direct_sum(a.circ, b.circ, space);
  out.star = direct_sum(a.star, b.star, space);
  out.bracket = direct_sum(a.bracket, b.bracket, space);
  return out;
}

GradedBilinearMap rab_circ() {
  GradedBilinearMap m(make_space({{"L", Parity::Even}, {"W", Parity::Even}}));
  m.set(1, 0, 0, Scalar(1));
  m.set(1, 1, 1, Scalar(1));
  return m;
}

GradedBilinearMap rab_bracket(const Rational& a, const Rational& b) {
  GradedBilinearMap m(make_space({{"L", Parity::Even}, {"W", Parity::Even}}));
  m.set(1, 0, 0, Scalar(a));
  m.set(1, 1, 0, Scalar(b));
  return m;
}

GradedBilinearMap gd_final_circ(const Rational& a) {
  GradedBilinearMap m(make_space({{"L", Parity::Even}, {"W", Parity::Even}}));
  m.set(0, 0, 0, Scalar(1));
  m.set(1, 0, 1, Scalar(1));
  m.set(0, 1, 1, Scalar(a - 1));
  return m;
}

GradedBilinearMap rab_circ_symbolic() {
  GradedBilinearMap m(make_space({{"L", Parity::Even}, {"W", Parity::Even}}, {"a", "b"}));
  m.set(1, 0, 0, Scalar::constant(1, 2));
  m.set(1, 1, 1, Scalar::constant(1, 2));
  return m;
}

GradedBilinearMap rab_bracket_symbolic() {
  GradedBilinearMap m(make_space({{"L", Parity::Even}, {"W", Parity::Even}}, {"a", "b"}));
  m.set(1, 0, 0, Scalar::variable(0, 2));
  m.set(1, 1, 0, Scalar::variable(1, 2));
  return m;
}

GradedBilinearMap gd_final_circ_symbolic() {
  GradedBilinearMap m(make_space({{"L", Parity::Even}, {"W", Parity::Even}}, {"a"}));
  m.set(0, 0, 0, Scalar::constant(1, 1));
  m.set(1, 0, 1, Scalar::constant(1, 1));
  m.set(0, 1, 1, Scalar::variable(0, 1) - Scalar::constant(1, 1));
  return m;
}

namespace {

/// e o e = e, e o t = t o e = t, t o t = 0 with t odd: a unital supercommutative algebra.
GradedBilinearMap unital_super() {
  GradedBilinearMap m(make_space({{"e", Parity::Even}, {"t", Parity::Odd}}));
  m.set(0, 0, 0, Scalar(1));
  m.set(0, 1, 1, Scalar(1));
  m.set(1, 0, 1, Scalar(1));
  return m;
}

GradedBilinearMap idempotent() {
  GradedBilinearMap m(make_space({{"e", Parity::Even}}));
  m.set(0, 0, 0, Scalar(1));
  return m;
}

/// a o a = b with the given parity of a.
GradedBilinearMap square_zero(Parity a_parity) {
  GradedBilinearMap m(make_space({{"a", a_parity}, {"b", Parity::Even}}));
  m.set(0, 0, 1, Scalar(1));
  return m;
}

GradedBilinearMap zero_on(const SuperSpace& space) { return GradedBilinearMap(space); }

std::vector<std::pair<GradedBilinearMap, GradedBilinearMap>> doubled_pairs() {
  std::vector<std::pair<GradedBilinearMap, GradedBilinearMap>> out;
  for (auto [a, b] : std::vector<std::pair<long, long>>{{0, 0}, {1, 0}, {0, 1}, {1, -2}, {-3, 2}}) {
    out.push_back({rab_circ(), rab_bracket(a, b)});
  }
  out.push_back({idempotent(), zero_on(idempotent().space())});
  out.push_back({unital_super(), zero_on(unital_super().space())});
  const SuperSpace odd = make_space({{"o", Parity::Odd}});
  out.push_back({zero_on(odd), zero_on(odd)});
  return out;
}

std::vector<std::pair<GradedBilinearMap, GradedBilinearMap>> symmetrized_pairs() {
  std::vector<std::pair<GradedBilinearMap, GradedBilinearMap>> out;
  for (Rational a : {Rational(2), Rational(0), Rational(1, 2), Rational(-1)}) {
    out.push_back({gd_final_circ(a), zero_on(gd_final_circ(a).space())});
  }
  out.push_back({idempotent(), zero_on(idempotent().space())});
  out.push_back({unital_super(), zero_on(unital_super().space())});
  // Neveu-Schwarz: L o L = L, G o L = G, L o G = G/2, [G, G] = 2L.
  const SuperSpace ns = make_space({{"L", Parity::Even}, {"G", Parity::Odd}});
  GradedBilinearMap circ(ns), bracket(ns);
  circ.set(0, 0, 0, Scalar(1));
  circ.set(1, 0, 1, Scalar(1));
  circ.set(0, 1, 1, Scalar(Rational(1, 2)));
  bracket.set(1, 1, 0, Scalar(2));
  out.push_back({circ, bracket});
  return out;
}

/// Products with (x.y).z = x.(y.z) = 0 and scalar brackets built from them.
std::vector<std::pair<GradedBilinearMap, GradedBilinearMap>> nilpotent_pairs() {
  std::vector<std::pair<GradedBilinearMap, GradedBilinearMap>> out;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const GradedBilinearMap product = square_zero(p);
    out.push_back({product, zero_on(product.space())});
    out.push_back({product, scalar_bracket(product, Scalar(1), Scalar(2))});
    out.push_back({product, scalar_bracket(product, Scalar(-1), Scalar(Rational(1, 2)))});
    const SuperSpace line = make_space({{"z", p}});
    out.push_back({zero_on(line), zero_on(line)});
  }
  return out;
}

/// Left Leibniz superalgebras for current-type data.
std::vector<GradedBilinearMap> left_leibniz_brackets() {
  std::vector<GradedBilinearMap> out;
  GradedBilinearMap nil(make_space({{"x", Parity::Even}, {"y", Parity::Even}}));
  nil.set(1, 1, 0, Scalar(1));
  out.push_back(nil);
  GradedBilinearMap heis(make_space({{"z", Parity::Even}, {"t", Parity::Odd}}));
  heis.set(1, 1, 0, Scalar(1));
  out.push_back(heis);
  GradedBilinearMap sl2(make_space({{"h", Parity::Even}, {"e", Parity::Even}, {"f", Parity::Even}}));
  sl2.set(0, 1, 1, Scalar(2));
  sl2.set(1, 0, 1, Scalar(-2));
  sl2.set(0, 2, 2, Scalar(-2));
  sl2.set(2, 0, 2, Scalar(2));
  sl2.set(1, 2, 0, Scalar(1));
  sl2.set(2, 1, 0, Scalar(-1));
  out.push_back(sl2);
  out.push_back(rab_bracket(1, -1));
  return out;
}

}  // namespace

std::vector<QuadraticData> passing_seeds(StarMode mode) {
  std::vector<QuadraticData> out;
  switch (mode) {
    case StarMode::Doubled:
      for (const auto& [c, b] : doubled_pairs()) out.push_back(make_quadratic(c, b, mode));
      break;
    case StarMode::Symmetrized:
      for (const auto& [c, b] : symmetrized_pairs()) out.push_back(make_quadratic(c, b, mode));
      break;
    case StarMode::StarZero:
      for (const auto& [c, b] : nilpotent_pairs()) out.push_back(make_quadratic(c, b, mode));
      break;
    case StarMode::CircZero:
      for (const auto& [s, b] : nilpotent_pairs()) out.push_back(make_quadratic(s, b, mode, s));
      break;
    case StarMode::Explicit:
      for (StarMode m : {StarMode::Doubled, StarMode::Symmetrized, StarMode::StarZero, StarMode::CircZero}) {
        for (QuadraticData q : passing_seeds(m)) {
          q.mode = StarMode::Explicit;
          out.push_back(q);
        }
      }
      for (const auto& b : left_leibniz_brackets()) {
        out.push_back(make_quadratic(zero_on(b.space()), b, mode, zero_on(b.space())));
      }
      break;
  }
  return out;
}

QuadraticData random_passing(Rng& rng, StarMode mode, std::size_t max_dim) {
  const std::vector<QuadraticData> seeds = passing_seeds(mode);
  if (std::none_of(seeds.begin(), seeds.end(), [&](const QuadraticData& s) { return s.space().dim() <= max_dim; })) {
    throw std::invalid_argument("no passing seed fits the requested dimension");
  }
  QuadraticData q;
  do {
    q = seeds[rng.index(seeds.size())];
  } while (q.space().dim() > max_dim);
  if (q.space().dim() < max_dim && rng.coin()) {
    QuadraticData other;
    do {
      other = seeds[rng.index(seeds.size())];
    } while (q.space().dim() + other.space().dim() > max_dim);
    q = direct_sum(q, other);
  }
  return transform(q, random_basis_change(rng, q.space()));
}

QuadraticData random_quadratic(Rng& rng, StarMode mode, std::size_t dim) {
  const SuperSpace space = random_space(rng, dim);
  const GradedBilinearMap circ = random_map(rng, space, 0.3);
  const GradedBilinearMap bracket = random_map(rng, space, 0.3);
  return make_quadratic(circ, bracket, mode, random_map(rng, space, 0.3));
}

void mutate(Rng& rng, QuadraticData& q) {
  GradedBilinearMap circ = q.circ, star = q.star, bracket = q.bracket;
  const bool circ_free = q.mode != StarMode::CircZero;
  const bool star_free = q.mode == StarMode::Explicit || q.mode == StarMode::CircZero;
  std::vector<GradedBilinearMap*> targets{&bracket};
  if (circ_free) targets.push_back(&circ);
  if (star_free) targets.push_back(&star);
  mutate(rng, *targets[rng.index(targets.size())]);
  q = make_quadratic(circ, bracket, q.mode, star);
}

}  // namespace confalg::testing
