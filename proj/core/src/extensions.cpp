#include "confalg/extensions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "confalg/errors.hpp"

namespace confalg {

CocycleAnsatz::CocycleAnsatz(std::size_t dim, unsigned degree)
    : dim_(dim), alphas_(degree + 1, std::vector<Scalar>(dim * dim)) {}

bool CocycleAnsatz::is_zero() const {
  for (const auto& m : alphas_) {
    for (const auto& s : m) {
      if (!s.is_zero()) return false;
    }
  }
  return true;
}

Scalar CocycleAnsatz::apply(unsigned i, const Vec& u, const Vec& v) const {
  Scalar r;
  if (i > degree()) return r;
  for (std::size_t p = 0; p < dim_; ++p) {
    if (u[p].is_zero()) continue;
    for (std::size_t q = 0; q < dim_; ++q) {
      if (v[q].is_zero() || (*this)(i, p, q).is_zero()) continue;
      r += u[p] * v[q] * (*this)(i, p, q);
    }
  }
  return r;
}

SymbolPoly CocycleAnsatz::lambda_poly(std::size_t p, std::size_t q) const {
  SymbolPoly out;
  for (unsigned i = 0; i <= degree(); ++i) {
    const Scalar& c = (*this)(i, p, q);
    if (c.is_zero()) continue;
    SymbolExponents e{};
    e[static_cast<std::size_t>(Symbol::Lambda)] = static_cast<std::uint16_t>(i);
    out += SymbolPoly::monomial(e, c);
  }
  return out;
}

void CocycleAnsatz::check_parity(const SuperSpace& space) const {
  if (space.dim() != dim_) throw std::invalid_argument("ansatz dimension does not match the space");
  for (unsigned i = 0; i <= degree(); ++i) {
    for (std::size_t p = 0; p < dim_; ++p) {
      for (std::size_t q = 0; q < dim_; ++q) {
        if (space.parity(p) != space.parity(q) && !(*this)(i, p, q).is_zero()) {
          throw ParityError("alpha" + std::to_string(i) + "(" + space.name(p) + "," + space.name(q) +
                            ") pairs generators of different parity");
        }
      }
    }
  }
}

std::string CocycleAnsatz::to_string(const SuperSpace& space, std::span<const std::string> params) const {
  std::ostringstream out;
  for (unsigned i = 0; i <= degree(); ++i) {
    for (std::size_t p = 0; p < dim_; ++p) {
      for (std::size_t q = 0; q < dim_; ++q) {
        const Scalar& c = (*this)(i, p, q);
        if (c.is_zero()) continue;
        out << "alpha" << i << "(" << space.name(p) << "," << space.name(q) << ") = " << c.to_string(params) << "\n";
      }
    }
  }
  return out.str();
}

AnsatzLayout::AnsatzLayout(SuperSpace space, std::vector<unsigned> degrees)
    : space_(std::move(space)), degrees_(std::move(degrees)) {
  std::sort(degrees_.begin(), degrees_.end());
  degrees_.erase(std::unique(degrees_.begin(), degrees_.end()), degrees_.end());
  for (unsigned i : degrees_) {
    for (std::size_t p = 0; p < space_.dim(); ++p) {
      for (std::size_t q = 0; q < space_.dim(); ++q) {
        if (space_.parity(p) == space_.parity(q)) entries_.push_back({i, p, q});
      }
    }
  }
}

AnsatzLayout AnsatzLayout::up_to(SuperSpace space, unsigned degree) {
  std::vector<unsigned> degrees(degree + 1);
  std::iota(degrees.begin(), degrees.end(), 0u);
  return AnsatzLayout(std::move(space), std::move(degrees));
}

unsigned AnsatzLayout::max_degree() const { return degrees_.empty() ? 0 : degrees_.back(); }

std::optional<std::size_t> AnsatzLayout::find(unsigned degree, std::size_t p, std::size_t q) const {
  Entry key{degree, p, q};
  auto less = [](const Entry& a, const Entry& b) {
    return std::tie(a.degree, a.left, a.right) < std::tie(b.degree, b.left, b.right);
  };
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key, less);
  if (it == entries_.end() || less(key, *it)) return std::nullopt;
  return static_cast<std::size_t>(it - entries_.begin());
}

std::string AnsatzLayout::label(std::size_t n) const {
  const auto& e = entries_[n];
  return "alpha" + std::to_string(e.degree) + "(" + space_.name(e.left) + "," + space_.name(e.right) + ")";
}

std::vector<std::string> AnsatzLayout::labels() const {
  std::vector<std::string> out;
  for (std::size_t n = 0; n < size(); ++n) out.push_back(label(n));
  return out;
}

CocycleAnsatz AnsatzLayout::ansatz(const RationalRow& coords) const {
  CocycleAnsatz a(space_.dim(), max_degree());
  for (std::size_t n = 0; n < size(); ++n) {
    if (coords[n] != 0) a.set(entries_[n].degree, entries_[n].left, entries_[n].right, Scalar(coords[n]));
  }
  return a;
}

CocycleAnsatz AnsatzLayout::family(const std::vector<RationalRow>& basis, std::size_t arity) const {
  CocycleAnsatz a(space_.dim(), max_degree());
  for (std::size_t n = 0; n < size(); ++n) {
    Scalar value = Scalar::zero(arity);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis[k][n] != 0) value += Scalar(basis[k][n]) * Scalar::variable(k, arity);
    }
    if (!value.is_zero()) a.set(entries_[n].degree, entries_[n].left, entries_[n].right, value);
  }
  return a;
}

std::vector<std::string> SolutionSpace::parameter_names() const {
  static const char* greek[] = {"gamma", "beta", "delta", "eta"};
  std::vector<std::string> names;
  for (std::size_t k = 0; k < dimension(); ++k) {
    names.push_back(dimension() <= 4 ? std::string(greek[k]) : "t" + std::to_string(k + 1));
  }
  return names;
}

CocycleAnsatz SolutionSpace::general() const { return layout.family(basis, dimension()); }

namespace {

std::string central_name(const SuperSpace& space) {
  std::string name = "c";
  while (space.index_of(name)) name += "_";
  return name;
}

LambdaBracket strip_params(const LambdaBracket& bracket) {
  if (!is_parameter_free(bracket)) {
    throw InstantiationRequired("the solvers need numeric structure constants; instantiate the parameters with --at");
  }
  LambdaBracket out(bracket.space().with_params({}));
  for (std::size_t i = 0; i < bracket.dim(); ++i) {
    for (std::size_t j = 0; j < bracket.dim(); ++j) {
      VPoly value;
      for (const auto& [k, p] : bracket(i, j).terms()) {
        SymbolPoly q;
        for (const auto& [e, c] : p.terms()) q += SymbolPoly::monomial(e, Scalar(*c.as_rational()));
        value += VPoly::term(k, q);
      }
      out.set(i, j, value);
    }
  }
  return out;
}

}  // namespace

LambdaBracket extend_bracket(const LambdaBracket& bracket, const CocycleAnsatz& alpha,
                             const std::vector<std::string>& alpha_params) {
  const SuperSpace& base = bracket.space();
  alpha.check_parity(base);
  std::vector<std::string> params = base.params();
  params.insert(params.end(), alpha_params.begin(), alpha_params.end());
  SuperSpace target = base.with_params(params).with_central(central_name(base));

  std::vector<std::size_t> identity(base.arity());
  std::iota(identity.begin(), identity.end(), 0);
  LambdaBracket out = embed(bracket, target, identity);

  std::vector<std::size_t> shifted(alpha_params.size());
  std::iota(shifted.begin(), shifted.end(), base.arity());
  auto move = [&](const Scalar& s) {
    if (s.arity() == 0) return s.extended(target.arity());
    if (!alpha_params.empty()) return s.remapped(shifted, target.arity());
    if (s.arity() != target.arity()) throw ArityError("alpha and the bracket live in different scalar rings");
    return s;
  };
  const std::size_t c = base.dim();
  for (std::size_t p = 0; p < base.dim(); ++p) {
    for (std::size_t q = 0; q < base.dim(); ++q) {
      SymbolPoly poly;
      const SymbolPoly source = alpha.lambda_poly(p, q);
      for (const auto& [e, s] : source.terms()) poly += SymbolPoly::monomial(e, move(s));
      if (poly.is_zero()) continue;
      out.set(p, q, out(p, q) + VPoly::term(c, poly));
    }
  }
  return out;
}

AxiomReport check_cocycle_direct(const LambdaBracket& bracket, const CocycleAnsatz& alpha, const CheckOptions& opts) {
  // A symbolic alpha over a parameter-free bracket gets placeholder names.
  std::size_t alpha_arity = 0;
  for (unsigned i = 0; i <= alpha.degree(); ++i)
    for (std::size_t p = 0; p < alpha.dim(); ++p)
      for (std::size_t q = 0; q < alpha.dim(); ++q) alpha_arity = std::max(alpha_arity, alpha(i, p, q).arity());
  std::vector<std::string> names;
  if (bracket.space().arity() == 0) {
    for (std::size_t k = 0; k < alpha_arity; ++k) names.push_back("t" + std::to_string(k + 1));
  }
  LambdaBracket ext = extend_bracket(bracket, alpha, names);
  const std::size_t c = bracket.dim();
  AxiomReport leib = check_conformal_leibniz(ext, opts);
  AxiomReport report(ext.space());
  report.mark_checked("cocycle");
  for (const auto& f : leib.failures()) {
    VPoly central = VPoly::term(c, f.residual.coefficient(c));
    VPoly rest = f.residual - central;
    if (!rest.is_zero()) report.add_failure({"conformal-leibniz", f.indices, rest, "the bracket itself is not Leibniz"});
    if (!central.is_zero()) report.add_failure({"cocycle", f.indices, central, {}});
  }
  return report;
}

LinearSystem direct_cocycle_system(const LambdaBracket& bracket, const AnsatzLayout& layout) {
  LambdaBracket base = strip_params(bracket);
  if (!(base.space().basis() == layout.space().basis())) throw std::invalid_argument("layout is for a different basis");
  const std::size_t n = layout.size();
  CocycleAnsatz unknowns(base.dim(), layout.max_degree());
  for (std::size_t u = 0; u < n; ++u) {
    unknowns.set(layout[u].degree, layout[u].left, layout[u].right, Scalar::variable(u, n));
  }
  LambdaBracket ext = extend_bracket(base, unknowns, layout.labels());
  const std::size_t c = base.dim();

  LinearSystem system{layout.labels(), {}};
  const AxiomReport report = check_conformal_leibniz(ext);
  for (const auto& f : report.failures()) {
    for (const auto& [k, p] : f.residual.terms()) {
      if (k != c) throw PreconditionError("the bracket is not Leibniz, so it has no central extensions");
      for (const auto& [e, coeff] : p.terms()) system.add_linear_form(coeff);
    }
  }
  return system;
}

SolutionSpace solve_central_ext_direct(const LambdaBracket& bracket, const AnsatzLayout& layout) {
  LinearSystem system = direct_cocycle_system(bracket, layout);
  return {layout, nullspace(system.rows, layout.size())};
}

namespace {

const Expr a = Expr::slot(0);
const Expr b = Expr::slot(1);
const Expr c = Expr::slot(2);

const KoszulSign none{};
const KoszulSign t = sgn({{1, 2}});            // (-1)^{bc}
const KoszulSign s_ab = sgn({{0, 1}});         // (-1)^{ab}
const KoszulSign s_b_ac = sgn({{1, 0}, {1, 2}});  // (-1)^{b(a+c)}
const KoszulSign s_a_bc = sgn({{0, 1}, {0, 2}});  // (-1)^{a(b+c)}
const KoszulSign s_ab_c = sgn({{0, 2}, {1, 2}});  // (-1)^{(a+b)c}

FormTerm term(Rational k, KoszulSign s, unsigned i, Expr l, Expr r) { return {std::move(k), std::move(s), i, std::move(l), std::move(r)}; }

}  // namespace

const std::vector<FormEquation>& anl_cocycle_equations() {
  static const std::vector<FormEquation> eqs = {
      {"anl-cocycle-1", {term(1, none, 3, a, circ(c, b))}, {term(1, none, 3, circ(b, a), c)}},
      {"anl-cocycle-1", {term(1, none, 3, circ(b, a), c)}, {term(1, t, 3, circ(c, a), b)}},
      {"anl-cocycle-2",
       {term(1, none, 2, a, circ(c, b)), term(1, none, 3, a, br(c, b))},
       {term(1, none, 2, circ(b, a), c), term(1, none, 3, br(b, a), c)}},
      {"anl-cocycle-3", {term(2, none, 2, a, circ(c, b))}, {term(1, none, 2, circ(b, a), c), term(3, none, 3, br(b, a), c)}},
      {"anl-cocycle-4", {term(1, none, 2, a, circ(c, b))}, {term(1, none, 2, circ(b, a), c), term(1, t, 2, circ(c, a), b)}},
      {"anl-cocycle-5",
       {term(1, none, 2, circ(b, a), c), term(1, t, 2, circ(c, a), b)},
       {term(1, none, 3, br(b, a), c), term(1, t, 3, br(c, a), b)}},
      {"anl-cocycle-6",
       {term(1, none, 1, a, circ(c, b)), term(1, none, 2, a, br(c, b))},
       {term(1, none, 1, circ(b, a), c), term(1, none, 2, br(b, a), c)}},
      {"anl-cocycle-7", {term(1, none, 1, a, circ(c, b))}, {term(1, none, 2, br(b, a), c), term(1, t, 1, circ(c, a), b)}},
      {"anl-cocycle-8",
       {term(1, none, 1, circ(b, a), c), term(-1, t, 1, circ(c, a), b)},
       {term(1, none, 2, br(b, a), c), term(-1, t, 2, br(c, a), b)}},
      {"anl-cocycle-9",
       {term(1, none, 0, a, circ(c, b)), term(1, none, 1, a, br(c, b))},
       {term(1, none, 0, circ(b, a), c), term(1, none, 1, br(b, a), c), term(-2, t, 0, circ(c, a), b)}},
      {"anl-cocycle-10",
       {term(2, none, 0, a, circ(c, b))},
       {term(-1, none, 0, circ(b, a), c), term(1, none, 1, br(b, a), c), term(-1, t, 0, circ(c, a), b),
        term(1, t, 1, br(c, a), b)}},
      {"anl-cocycle-11", {term(1, none, 0, a, br(c, b))}, {term(1, none, 0, br(b, a), c), term(-1, t, 0, br(c, a), b)}},
  };
  return eqs;
}

const std::vector<FormEquation>& assoc_novikov_cocycle_equations() {
  static const std::vector<FormEquation> eqs = {
      {"assoc-novikov-cocycle-1", {term(1, none, 3, a, circ(c, b))}, {term(1, none, 3, circ(b, a), c)}},
      {"assoc-novikov-cocycle-1", {term(1, none, 3, circ(b, a), c)}, {term(1, t, 3, circ(c, a), b)}},
      {"assoc-novikov-cocycle-2", {term(1, none, 1, a, circ(c, b))}, {term(1, none, 1, circ(b, a), c)}},
      {"assoc-novikov-cocycle-2", {term(1, none, 1, circ(b, a), c)}, {term(1, t, 1, circ(c, a), b)}},
      {"assoc-novikov-cocycle-3", {term(1, none, 0, a, circ(c, b))}, {term(-1, none, 0, circ(b, a), c)}},
      {"assoc-novikov-cocycle-3", {term(-1, none, 0, circ(b, a), c)}, {term(-1, t, 0, circ(c, a), b)}},
  };
  return eqs;
}

const std::vector<FormEquation>& gd_cocycle_equations() {
  static const std::vector<FormEquation> eqs = {
      {"gd-cocycle-1", {term(1, none, 3, circ(a, b), c)}, {term(1, s_ab, 3, circ(b, a), c)}},
      {"gd-cocycle-1", {term(1, s_ab, 3, circ(b, a), c)}, {term(1, s_ab, 3, a, circ(c, b))}},
      {"gd-cocycle-1", {term(1, s_ab, 3, a, circ(c, b))}, {term(1, s_b_ac, 3, circ(c, a), b)}},
      {"gd-cocycle-2",
       {term(1, none, 2, a, circ(c, b)), term(1, none, 3, a, br(c, b))},
       {term(1, s_ab, 2, circ(a, b), c), term(1, none, 3, br(b, a), c)}},
      {"gd-cocycle-3",
       {term(1, none, 2, a, star(c, b))},
       {term(-1, none, 2, circ(b, a), c), term(2, s_ab, 2, circ(a, b), c), term(3, none, 3, br(b, a), c)}},
      {"gd-cocycle-4",
       {term(-1, none, 2, circ(b, a), c), term(1, none, 3, br(b, a), c), term(-1, t, 2, circ(c, a), b),
        term(1, t, 3, br(c, a), b)},
       {}},
      {"gd-cocycle-5", {term(1, none, 2, a, star(c, b))}, {term(1, none, 2, star(b, a), c), term(1, t, 2, star(c, a), b)}},
      {"gd-cocycle-6",
       {term(1, none, 1, a, circ(c, b)), term(1, none, 2, a, br(c, b))},
       {term(1, s_ab, 1, circ(a, b), c), term(1, none, 2, br(b, a), c)}},
      {"gd-cocycle-7",
       {term(-1, none, 1, circ(b, a), c), term(1, none, 2, br(b, a), c), term(1, t, 1, circ(c, a), b),
        term(-1, t, 2, br(c, a), b)},
       {}},
      {"gd-cocycle-8",
       {term(1, none, 1, a, star(c, b))},
       {term(1, s_ab, 1, circ(a, b), c), term(-1, none, 1, circ(b, a), c), term(2, none, 2, br(b, a), c),
        term(1, t, 1, star(c, a), b)}},
      {"gd-cocycle-9",
       {term(1, none, 0, a, circ(c, b)), term(1, none, 1, a, br(c, b))},
       {term(1, s_ab, 0, circ(a, b), c), term(1, none, 1, br(b, a), c), term(-1, t, 0, star(c, a), b)}},
      {"gd-cocycle-10",
       {term(1, none, 0, a, star(c, b))},
       {term(1, none, 1, br(b, a), c), term(-1, none, 0, circ(b, a), c), term(-1, t, 0, circ(c, a), b),
        term(1, t, 1, br(c, a), b)}},
      {"gd-cocycle-11", {term(1, none, 0, a, br(c, b))}, {term(1, none, 0, br(b, a), c), term(-1, t, 0, br(c, a), b)}},
  };
  return eqs;
}

const std::vector<FormEquation>& novikov_cocycle_equations() {
  static const std::vector<FormEquation> eqs = {
      {"novikov-cocycle-1", {term(1, none, 3, circ(a, b), c)}, {term(1, s_ab, 3, circ(b, a), c)}},
      {"novikov-cocycle-1", {term(1, s_ab, 3, circ(b, a), c)}, {term(1, s_ab, 3, a, circ(c, b))}},
      {"novikov-cocycle-1", {term(1, s_ab, 3, a, circ(c, b))}, {term(1, s_b_ac, 3, circ(c, a), b)}},
      {"novikov-cocycle-2", {term(1, none, 2, a, circ(c, b))}, {term(1, s_ab, 2, circ(a, b), c)}},
      {"novikov-cocycle-2", {term(1, s_ab, 2, circ(a, b), c)}, {term(-1, s_a_bc, 2, circ(c, b), a)}},
      {"novikov-cocycle-3",
       {term(1, none, 2, a, circ(b, c))},
       {term(-1, t, 2, circ(b, a), c), term(1, s_b_ac, 2, circ(a, b), c)}},
      {"novikov-cocycle-4", {term(1, none, 1, a, circ(c, b))}, {term(1, s_ab, 1, circ(a, b), c)}},
      {"novikov-cocycle-4", {term(1, s_ab, 1, circ(a, b), c)}, {term(1, s_a_bc, 1, circ(c, b), a)}},
      {"novikov-cocycle-5",
       {term(1, none, 0, a, circ(c, b)), term(1, t, 0, circ(c, a), b)},
       {term(-1, none, 0, circ(b, a), c), term(-1, t, 0, a, circ(b, c))}},
      {"novikov-cocycle-6",
       {term(1, none, 0, a, circ(c, b)), term(1, t, 0, circ(c, a), b)},
       {term(1, s_ab, 0, circ(a, b), c), term(-1, s_ab_c, 0, circ(a, c), b)}},
  };
  return eqs;
}

LinearSystem structured_cocycle_system(const std::vector<FormEquation>& equations, const Operations& ops,
                                       const AnsatzLayout& layout) {
  const SuperSpace& space = layout.space();
  const std::size_t d = space.dim();
  LinearSystem system{layout.labels(), {}};
  std::vector<std::size_t> slots(3, 0);
  std::vector<Parity> parities(3);
  for (const auto& eq : equations) {
    for (slots[0] = 0; slots[0] < d; ++slots[0]) {
      for (slots[1] = 0; slots[1] < d; ++slots[1]) {
        for (slots[2] = 0; slots[2] < d; ++slots[2]) {
          for (int k = 0; k < 3; ++k) parities[k] = space.parity(slots[k]);
          RationalRow row(layout.size());
          auto accumulate = [&](const FormTerm& ft, int side) {
            Vec u = evaluate(ft.left, ops, slots);
            Vec v = evaluate(ft.right, ops, slots);
            Rational k = ft.coefficient * ft.sign.evaluate(parities) * side;
            for (std::size_t p = 0; p < d; ++p) {
              if (u[p].is_zero()) continue;
              for (std::size_t q = 0; q < d; ++q) {
                if (v[q].is_zero()) continue;
                if (auto col = layout.find(ft.degree, p, q)) row[*col] += k * u[p].to_rational() * v[q].to_rational();
              }
            }
          };
          for (const auto& ft : eq.lhs) accumulate(ft, 1);
          for (const auto& ft : eq.rhs) accumulate(ft, -1);
          system.rows.push_back(std::move(row));
        }
      }
    }
  }
  return system;
}

void require_parameter_free(const GradedBilinearMap& map, const char* what) {
  for (std::size_t i = 0; i < map.dim(); ++i) {
    for (std::size_t j = 0; j < map.dim(); ++j) {
      for (std::size_t k = 0; k < map.dim(); ++k) {
        if (!map.constant(i, j, k).is_constant()) {
          throw InstantiationRequired(std::string(what) + " has parametric constants; instantiate them with --at");
        }
      }
    }
  }
}

bool products_span(const GradedBilinearMap& circ) {
  const std::size_t d = circ.dim();
  std::vector<RationalRow> rows;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      RationalRow row(d);
      for (std::size_t k = 0; k < d; ++k) row[k] = circ.constant(i, j, k).to_rational();
      rows.push_back(std::move(row));
    }
  }
  return rank(rows, d) == d;
}

namespace {

CocycleSolution solve_structured(const std::vector<FormEquation>& eqs, const GradedBilinearMap& circ,
                                 const GradedBilinearMap& star_map, const GradedBilinearMap& bracket,
                                 std::vector<unsigned> degrees) {
  AnsatzLayout layout(circ.space(), std::move(degrees));
  Operations ops{&circ, &star_map, &bracket};
  LinearSystem system = structured_cocycle_system(eqs, ops, layout);
  CocycleSolution out;
  out.space = {layout, nullspace(system.rows, layout.size())};
  out.products_span = products_span(circ);
  if (!out.products_span) {
    out.warnings.push_back(
        "the products x o y do not span V; cocycles of degree above 3 are not excluded and the degree-3 space "
        "may be incomplete");
  }
  return out;
}

void require(const AxiomReport& report, const char* what) {
  if (!report.passed()) throw PreconditionError(std::string("input is not ") + what + ":\n" + report.to_string());
}

}  // namespace

CocycleSolution solve_central_ext_anl(const GradedBilinearMap& circ, const GradedBilinearMap& bracket) {
  require_parameter_free(circ, "o");
  require_parameter_free(bracket, "the bracket");
  require(check_anl(circ, bracket), "an ass-Nov-Leibniz superalgebra");
  return solve_structured(anl_cocycle_equations(), circ, derive_star(circ, StarMode::Doubled), bracket, {0, 1, 2, 3});
}

CocycleSolution solve_central_ext_assoc_novikov(const GradedBilinearMap& circ) {
  require_parameter_free(circ, "o");
  require(check_associative_novikov(circ), "an associative Novikov superalgebra");
  GradedBilinearMap zero(circ.space());
  return solve_structured(assoc_novikov_cocycle_equations(), circ, derive_star(circ, StarMode::Doubled), zero,
                          {0, 1, 3});
}

CocycleSolution solve_leibniz_central_ext_gd(const GradedBilinearMap& circ, const GradedBilinearMap& bracket) {
  if (bracket.is_zero()) return solve_leibniz_central_ext_novikov(circ);
  require_parameter_free(circ, "o");
  require_parameter_free(bracket, "the bracket");
  require(check_gd_bialgebra(circ, bracket), "a super Gel'fand-Dorfman bialgebra");
  return solve_structured(gd_cocycle_equations(), circ, derive_star(circ, StarMode::Symmetrized), bracket,
                          {0, 1, 2, 3});
}

CocycleSolution solve_leibniz_central_ext_novikov(const GradedBilinearMap& circ) {
  require_parameter_free(circ, "o");
  require(check_novikov(circ), "a Novikov superalgebra");
  GradedBilinearMap zero(circ.space());
  return solve_structured(novikov_cocycle_equations(), circ, derive_star(circ, StarMode::Symmetrized), zero,
                          {0, 1, 2, 3});
}

DegreeBoundReport degree_bound_experiment(const QuadraticData& q, unsigned degree) {
  if (degree <= 3) throw std::invalid_argument("the degree bound experiment needs N > 3");
  require_parameter_free(q.circ, "o");
  LambdaBracket bracket = build_quadratic_bracket(q);
  DegreeBoundReport r;
  r.degree = degree;
  r.high = solve_central_ext_direct(bracket, AnsatzLayout::up_to(q.space(), degree));
  r.three = solve_central_ext_direct(bracket, AnsatzLayout::up_to(q.space(), 3));
  r.products_span = products_span(q.circ);

  const std::size_t d = q.space().dim();
  for (std::size_t k = 0; k < r.high.dimension(); ++k) {
    CocycleAnsatz alpha = r.high.ansatz(k);
    for (unsigned i = 4; i <= degree; ++i) {
      for (std::size_t p = 0; p < d; ++p) {
        for (std::size_t q2 = 0; q2 < d; ++q2) {
          if (!alpha(i, p, q2).is_zero()) r.high_terms_vanish = false;
        }
      }
      for (std::size_t x = 0; x < d; ++x) {
        for (std::size_t y = 0; y < d; ++y) {
          for (std::size_t z = 0; z < d; ++z) {
            if (!alpha.apply(i, q.circ(x, y), Vec::basis(d, z)).is_zero()) r.bound_on_products = false;
          }
        }
      }
    }
  }

  std::vector<RationalRow> padded;
  for (const auto& row : r.three.basis) {
    RationalRow wide(r.high.layout.size());
    for (std::size_t n = 0; n < r.three.layout.size(); ++n) {
      const auto& e = r.three.layout[n];
      wide[*r.high.layout.find(e.degree, e.left, e.right)] = row[n];
    }
    padded.push_back(std::move(wide));
  }
  r.equals_degree_three = rref(padded, r.high.layout.size()) == r.high.basis;
  return r;
}

}  // namespace confalg
