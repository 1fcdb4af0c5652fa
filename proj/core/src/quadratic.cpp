#include "confalg/quadratic.hpp"

#include <algorithm>
#include <stdexcept>

#include "confalg/errors.hpp"

namespace confalg {

namespace {

const Expr x = Expr::slot(0);
const Expr y = Expr::slot(1);
const Expr z = Expr::slot(2);

// (-1)^{|x||y|}, (-1)^{|y||z|} and (-1)^{|z|(|x|+|y|)}.
const KoszulSign none{};
const KoszulSign s01 = sgn({{0, 1}});
const KoszulSign s12 = sgn({{1, 2}});
const KoszulSign s2_01 = sgn({{2, 0}, {2, 1}});

int highest_slot(const Expr& e) {
  if (e.is_slot()) return e.slot_index();
  return std::max(highest_slot(e.left()), highest_slot(e.right()));
}

int arity_of(const VecEquation& eq) {
  int top = 0;
  for (const auto* side : {&eq.lhs, &eq.rhs}) {
    for (const auto& t : *side) top = std::max(top, highest_slot(t.expr));
  }
  return top + 1;
}

}  // namespace

const char* star_mode_name(StarMode mode) {
  switch (mode) {
    case StarMode::Explicit: return "explicit";
    case StarMode::Doubled: return "doubled";
    case StarMode::Symmetrized: return "symmetrized";
    case StarMode::StarZero: return "star-zero";
    case StarMode::CircZero: return "circ-zero";
  }
  return "?";
}

GradedBilinearMap derive_star(const GradedBilinearMap& circ, StarMode mode,
                              const std::optional<GradedBilinearMap>& explicit_star) {
  switch (mode) {
    case StarMode::Doubled: return circ.scaled(Scalar(2));
    case StarMode::Symmetrized: return circ + circ.super_flipped();
    case StarMode::StarZero: return GradedBilinearMap(circ.space());
    case StarMode::Explicit:
    case StarMode::CircZero:
      if (!explicit_star) throw std::invalid_argument(std::string("star mode ") + star_mode_name(mode) + " needs an explicit star table");
      return *explicit_star;
  }
  return GradedBilinearMap(circ.space());
}

QuadraticData make_quadratic(const GradedBilinearMap& circ, const GradedBilinearMap& bracket, StarMode mode,
                             const std::optional<GradedBilinearMap>& explicit_star) {
  QuadraticData q;
  q.mode = mode;
  q.circ = mode == StarMode::CircZero ? GradedBilinearMap(bracket.space()) : circ;
  q.star = derive_star(q.circ, mode, explicit_star);
  q.bracket = bracket;
  return q;
}

LambdaBracket build_quadratic_bracket(const QuadraticData& q) {
  // The dictionary swaps the arguments: [x_l y] is built from y o x,
  // y * x and [y, x]. Kept verbatim so examples transcribe literally.
  LambdaBracket out(q.space());
  const SymbolPoly d = SymbolPoly::symbol(Symbol::D);
  const SymbolPoly l = SymbolPoly::symbol(Symbol::Lambda);
  for (std::size_t i = 0; i < q.space().dim(); ++i) {
    for (std::size_t j = 0; j < q.space().dim(); ++j) {
      out.set(i, j,
              d * VPoly::from_vec(q.circ(j, i)) + l * VPoly::from_vec(q.star(j, i)) + VPoly::from_vec(q.bracket(j, i)));
    }
  }
  return out;
}

const std::vector<VecEquation>& structure_equations_t() {
  static const std::vector<VecEquation> eqs = {
      {"structure-1",
       {{1, none, circ(circ(x, y), z)}, {1, none, star(circ(x, y), z)}},
       {{-1, none, circ(x, circ(y, z))},
        {1, none, circ(x, star(y, z))},
        {-1, s01, circ(y, star(x, z))},
        {1, s01, star(y, star(x, z))}}},
      {"structure-2",
       {{1, none, circ(circ(x, y), z)}},
       {{1, s01, star(y, circ(x, z))}, {-1, s01, circ(y, circ(x, z))}}},
      {"structure-3",
       {{1, none, circ(star(x, y), z)}},
       {{-1, none, circ(x, circ(y, z))}, {2, s01, star(y, circ(x, z))}, {-1, s01, circ(y, circ(x, z))}}},
      {"structure-4",
       {{1, none, star(circ(x, y), z)}},
       {{-1, none, star(x, circ(y, z))}, {1, none, star(x, star(y, z))}}},
      {"structure-5",
       {{1, none, star(star(x, y), z)}},
       {{-2, none, star(x, circ(y, z))}, {1, none, star(x, star(y, z))}, {1, s01, star(y, star(x, z))}}},
      {"structure-6", {{-1, none, star(x, circ(y, z))}, {1, s01, star(y, circ(x, z))}}, {}},
      {"structure-7",
       {{1, none, star(br(x, y), z)}, {1, none, br(circ(x, y), z)}},
       {{-1, none, br(x, circ(y, z))},
        {1, none, br(x, star(y, z))},
        {1, none, star(x, br(y, z))},
        {-1, s01, br(y, star(x, z))}}},
      {"structure-8",
       {{1, none, circ(br(x, y), z)}, {1, none, br(circ(x, y), z)}},
       {{1, none, circ(x, br(y, z))},
        {-1, s01, br(y, circ(x, z))},
        {-1, s01, circ(y, br(x, z))},
        {1, s01, star(y, br(x, z))}}},
      {"structure-9",
       {{1, none, br(star(x, y), z)}},
       {{-1, none, br(x, circ(y, z))},
        {1, none, star(x, br(y, z))},
        {-1, s01, br(y, circ(x, z))},
        {1, s01, star(y, br(x, z))}}},
  };
  return eqs;
}

VecEquation left_leibniz_equation() {
  return {"left-leibniz", {{1, none, br(x, br(y, z))}}, {{1, none, br(br(x, y), z)}, {1, s01, br(y, br(x, z))}}};
}

const std::vector<VecEquation>& associative_novikov_equations() {
  static const std::vector<VecEquation> eqs = {
      {"associativity", {{1, none, circ(circ(x, y), z)}}, {{1, none, circ(x, circ(y, z))}}},
      {"left-supercommutation", {{1, none, circ(x, circ(y, z))}}, {{1, s01, circ(y, circ(x, z))}}},
  };
  return eqs;
}

const std::vector<VecEquation>& anl_equations() {
  static const std::vector<VecEquation> eqs = [] {
    std::vector<VecEquation> v = associative_novikov_equations();
    v.push_back({"anl-compat-1", {{2, none, circ(x, br(y, z))}}, {{1, none, br(circ(x, y), z)}, {1, s01, br(y, circ(x, z))}}});
    v.push_back({"anl-compat-2", {{2, none, circ(br(x, y), z)}}, {{1, none, br(x, circ(y, z))}, {-1, s01, br(y, circ(x, z))}}});
    v.push_back({"anl-compat-3", {{1, none, circ(br(x, y), z)}}, {{-1, none, circ(x, br(y, z))}, {1, s01, circ(y, br(x, z))}}});
    return v;
  }();
  return eqs;
}

const std::vector<VecEquation>& novikov_equations() {
  static const std::vector<VecEquation> eqs = {
      {"novikov-right-commutative", {{1, none, circ(circ(x, y), z)}}, {{1, s12, circ(circ(x, z), y)}}},
      {"novikov-left-symmetric",
       {{1, none, circ(circ(x, y), z)}, {-1, none, circ(x, circ(y, z))}},
       {{1, s01, circ(circ(y, x), z)}, {-1, s01, circ(y, circ(x, z))}}},
  };
  return eqs;
}

const std::vector<VecEquation>& gd_compatibility_equations() {
  static const std::vector<VecEquation> eqs = {
      {"gd-compatibility",
       {{1, none, br(circ(x, y), z)},
        {1, none, circ(br(x, y), z)},
        {-1, none, circ(x, br(y, z))},
        {-1, s12, br(circ(x, z), y)},
        {-1, s12, circ(br(x, z), y)}},
       {}},
  };
  return eqs;
}

const std::vector<VecEquation>& symmetrized_equations() {
  static const std::vector<VecEquation> eqs = {
      {"sym-compat",
       {{1, none, circ(br(x, y), z)}, {1, none, br(circ(x, y), z)}},
       {{1, none, circ(x, br(y, z))}, {-1, s01, br(y, circ(x, z))}, {1, s12, circ(br(x, z), y)}}},
      {"sym-skew-circ", {{1, none, circ(br(x, y), z)}, {1, s01, circ(br(y, x), z)}}, {}},
      {"sym-skew-image", {{1, none, br(circ(x, y), z)}}, {{-1, s2_01, br(z, circ(x, y))}}},
  };
  return eqs;
}

const std::vector<VecEquation>& star_trivial_equations() {
  static const std::vector<VecEquation> eqs = {
      {"circ-nilpotent", {{1, none, circ(circ(x, y), z)}}, {}},
      {"circ-nilpotent", {{1, none, circ(x, circ(y, z))}}, {}},
      {"circ-bracket-balance", {{1, none, br(circ(x, y), z)}}, {{-1, none, br(x, circ(y, z))}}},
      {"circ-bracket-balance", {{1, none, br(x, circ(y, z))}}, {{-1, s01, br(y, circ(x, z))}}},
      {"circ-bracket-compat",
       {{1, none, circ(br(x, y), z)}, {1, none, br(circ(x, y), z)}},
       {{1, none, circ(x, br(y, z))}, {-1, s01, br(y, circ(x, z))}, {-1, s01, circ(y, br(x, z))}}},
  };
  return eqs;
}

const std::vector<VecEquation>& circ_trivial_equations() {
  static const std::vector<VecEquation> eqs = {
      {"star-nilpotent", {{1, none, star(star(x, y), z)}}, {}},
      {"star-nilpotent", {{1, none, star(x, star(y, z))}}, {}},
      {"star-bracket-zero", {{1, none, star(x, br(y, z))}}, {}},
      {"star-bracket-zero", {{1, none, br(star(x, y), z)}}, {}},
      {"star-bracket-compat", {{1, none, star(br(x, y), z)}}, {{1, none, br(x, star(y, z))}, {-1, s01, br(y, star(x, z))}}},
  };
  return eqs;
}

AxiomReport check_equations(const std::vector<VecEquation>& equations, const Operations& ops,
                            const SuperSpace& space, const CheckOptions& opts) {
  AxiomReport report(space);
  const std::size_t d = space.dim();
  for (const auto& eq : equations) {
    report.mark_checked(eq.name);
    const int n = arity_of(eq);
    std::vector<std::size_t> slots(static_cast<std::size_t>(n), 0);
    // Odometer over ordered n-tuples of basis indices.
    while (true) {
      Vec r = residual(eq, ops, slots);
      if (!r.is_zero()) {
        report.add_failure({eq.name, slots, VPoly::from_vec(r), {}});
        if (opts.fail_fast) return report;
      }
      int k = n - 1;
      while (k >= 0 && ++slots[static_cast<std::size_t>(k)] == d) slots[static_cast<std::size_t>(k--)] = 0;
      if (k < 0) break;
    }
  }
  return report;
}

namespace {

AxiomReport run(const std::vector<VecEquation>& eqs, const Operations& ops, const SuperSpace& space,
                const CheckOptions& opts, AxiomReport report = {}) {
  if (report.space().dim() == 0) report = AxiomReport(space);
  if (opts.fail_fast && !report.passed()) return report;
  report.merge(check_equations(eqs, ops, space, opts));
  return report;
}

AxiomReport with_left_leibniz(AxiomReport report, const GradedBilinearMap& bracket, const CheckOptions& opts) {
  if (opts.fail_fast && !report.passed()) return report;
  report.merge(check_left_leibniz_superalgebra(bracket, opts));
  return report;
}

}  // namespace

AxiomReport check_structure_equations_t(const QuadraticData& q, const CheckOptions& opts) {
  return with_left_leibniz(run(structure_equations_t(), q.operations(), q.space(), opts), q.bracket, opts);
}

AxiomReport check_anl(const GradedBilinearMap& circ, const GradedBilinearMap& bracket, const CheckOptions& opts) {
  Operations ops{&circ, nullptr, &bracket};
  return with_left_leibniz(run(anl_equations(), ops, circ.space(), opts), bracket, opts);
}

AxiomReport check_novikov(const GradedBilinearMap& circ, const CheckOptions& opts) {
  return run(novikov_equations(), Operations{&circ, nullptr, nullptr}, circ.space(), opts);
}

AxiomReport check_associative_novikov(const GradedBilinearMap& circ, const CheckOptions& opts) {
  return run(associative_novikov_equations(), Operations{&circ, nullptr, nullptr}, circ.space(), opts);
}

AxiomReport check_gd_bialgebra(const GradedBilinearMap& circ, const GradedBilinearMap& bracket,
                               const CheckOptions& opts) {
  AxiomReport report = check_lie_superalgebra(bracket, opts);
  report = run(novikov_equations(), Operations{&circ, nullptr, nullptr}, circ.space(), opts, report);
  return run(gd_compatibility_equations(), Operations{&circ, nullptr, &bracket}, circ.space(), opts, report);
}

AxiomReport check_symmetrized_case(const GradedBilinearMap& circ, const GradedBilinearMap& bracket,
                                   const CheckOptions& opts) {
  AxiomReport report = check_novikov(circ, opts);
  report = with_left_leibniz(report, bracket, opts);
  return run(symmetrized_equations(), Operations{&circ, nullptr, &bracket}, circ.space(), opts, report);
}

AxiomReport check_star_trivial_case(const GradedBilinearMap& circ, const GradedBilinearMap& bracket,
                                    const CheckOptions& opts) {
  Operations ops{&circ, nullptr, &bracket};
  return with_left_leibniz(run(star_trivial_equations(), ops, circ.space(), opts), bracket, opts);
}

AxiomReport check_circ_trivial_case(const GradedBilinearMap& star_map, const GradedBilinearMap& bracket,
                                    const CheckOptions& opts) {
  Operations ops{nullptr, &star_map, &bracket};
  return with_left_leibniz(run(circ_trivial_equations(), ops, star_map.space(), opts), bracket, opts);
}

GradedBilinearMap scalar_bracket(const GradedBilinearMap& product, const Scalar& a, const Scalar& b) {
  return product.scaled(a) + product.super_flipped().scaled(-b);
}

AxiomReport check_star_trivial_scalar(const GradedBilinearMap& circ, const CheckOptions& opts) {
  std::vector<VecEquation> m1(star_trivial_equations().begin(), star_trivial_equations().begin() + 2);
  return run(m1, Operations{&circ, nullptr, nullptr}, circ.space(), opts);
}

AxiomReport check_circ_trivial_scalar(const GradedBilinearMap& star_map, const CheckOptions& opts) {
  std::vector<VecEquation> m4(circ_trivial_equations().begin(), circ_trivial_equations().begin() + 2);
  return run(m4, Operations{nullptr, &star_map, nullptr}, star_map.space(), opts);
}

AxiomReport check_commutative_associative(const GradedBilinearMap& product, const CheckOptions& opts) {
  static const std::vector<VecEquation> eqs = {
      {"supercommutative", {{1, none, circ(x, y)}}, {{1, s01, circ(y, x)}}},
      {"associative", {{1, none, circ(circ(x, y), z)}}, {{1, none, circ(x, circ(y, z))}}},
  };
  return run(eqs, Operations{&product, nullptr, nullptr}, product.space(), opts);
}

namespace {

void require_even(const LinearMap& p) {
  if (!p.is_even()) throw ParityError("averaging operator must be even (parity-preserving)");
}

}  // namespace

AxiomReport check_averaging(const LinearMap& p, const GradedBilinearMap& product, const CheckOptions& opts) {
  require_even(p);
  if (!check_commutative_associative(product, {true}).passed()) {
    throw PreconditionError("averaging operators are defined on supercommutative associative products");
  }
  AxiomReport report(product.space());
  report.mark_checked("averaging");
  const std::size_t d = product.dim();
  for (std::size_t i = 0; i < d; ++i) {
    const Vec& pi = p.image(i);
    for (std::size_t j = 0; j < d; ++j) {
      Vec lhs = p.apply(product.apply(pi, Vec::basis(d, j)));
      Vec rhs = product.apply(pi, p.image(j));
      Vec r = lhs - rhs;
      if (!r.is_zero()) {
        report.add_failure({"averaging", {i, j}, VPoly::from_vec(r), {}});
        if (opts.fail_fast) return report;
      }
    }
  }
  return report;
}

GradedBilinearMap build_assoc_novikov_from_averaging(const LinearMap& p, const GradedBilinearMap& product) {
  require_even(p);
  GradedBilinearMap out(product.space());
  const std::size_t d = product.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) out.set(i, j, product.apply(p.image(i), Vec::basis(d, j)));
  }
  return out;
}

namespace {

struct BracketUnknown {
  std::size_t i, j, k;
};

GradedBilinearMap family_from_basis(const SuperSpace& base, const std::vector<BracketUnknown>& unknowns,
                                    const std::vector<RationalRow>& basis) {
  std::vector<std::string> names;
  for (std::size_t s = 0; s < basis.size(); ++s) names.push_back("t" + std::to_string(s + 1));
  SuperSpace space = base.with_params(names);
  GradedBilinearMap family(space);
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    Scalar value = Scalar::zero(names.size());
    for (std::size_t s = 0; s < basis.size(); ++s) {
      if (basis[s][u] != 0) value += Scalar(basis[s][u]) * Scalar::variable(s, names.size());
    }
    if (!value.is_zero()) family.set(unknowns[u].i, unknowns[u].j, unknowns[u].k, value);
  }
  return family;
}

Scalar monic(const Scalar& s) {
  const Rational lead = s.terms().rbegin()->second;
  return Scalar(Rational(1) / lead) * s;
}

}  // namespace

BracketClassification classify_brackets(const GradedBilinearMap& circ) {
  const SuperSpace& base = circ.space();
  const std::size_t d = base.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (!circ.constant(i, j, k).as_rational()) {
          throw InstantiationRequired("classify_brackets needs numeric o; instantiate the parameters with --at");
        }
      }
    }
  }
  if (!check_associative_novikov(circ, {true}).passed()) {
    throw PreconditionError("classify_brackets needs an associative Novikov o");
  }

  BracketClassification out;
  std::vector<BracketUnknown> unknowns;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k : circ.admissible_targets(i, j)) {
        unknowns.push_back({i, j, k});
        out.unknowns.push_back("[" + base.name(i) + "," + base.name(j) + "]_" + base.name(k));
      }
    }
  }
  const std::size_t n = unknowns.size();
  SuperSpace generic = base.with_params(out.unknowns);
  GradedBilinearMap circ_u(generic);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        const Rational c = *circ.constant(i, j, k).as_rational();
        if (c != 0) circ_u.set(i, j, k, Scalar::constant(c, n));
      }
    }
  }
  GradedBilinearMap bracket_u(generic);
  for (std::size_t u = 0; u < n; ++u) bracket_u.set(unknowns[u].i, unknowns[u].j, unknowns[u].k, Scalar::variable(u, n));

  LinearSystem system{out.unknowns, {}};
  std::vector<VecEquation> compat(anl_equations().begin() + 2, anl_equations().end());
  Operations ops{&circ_u, nullptr, &bracket_u};
  for (const auto& eq : compat) {
    std::vector<std::size_t> slots(3, 0);
    for (slots[0] = 0; slots[0] < d; ++slots[0]) {
      for (slots[1] = 0; slots[1] < d; ++slots[1]) {
        for (slots[2] = 0; slots[2] < d; ++slots[2]) {
          Vec r = residual(eq, ops, slots);
          for (std::size_t k = 0; k < d; ++k) system.add_linear_form(r[k]);
        }
      }
    }
  }
  out.linear_basis = nullspace(system.rows, n);

  auto residuals = [&](const GradedBilinearMap& family) {
    std::vector<Scalar> found;
    Operations fops{nullptr, nullptr, &family};
    std::vector<VecEquation> leib{left_leibniz_equation()};
    std::vector<std::size_t> slots(3, 0);
    for (slots[0] = 0; slots[0] < d; ++slots[0]) {
      for (slots[1] = 0; slots[1] < d; ++slots[1]) {
        for (slots[2] = 0; slots[2] < d; ++slots[2]) {
          Vec r = residual(leib[0], fops, slots);
          for (std::size_t k = 0; k < d; ++k) {
            if (r[k].is_zero()) continue;
            Scalar m = monic(r[k]);
            if (std::find(found.begin(), found.end(), m) == found.end()) found.push_back(m);
          }
        }
      }
    }
    return found;
  };

  out.family = family_from_basis(base, unknowns, out.linear_basis);
  out.residual_constraints = residuals(out.family);
  if (out.residual_constraints.empty()) {
    out.residual_identically_zero = true;
    return out;
  }
  const bool linear = std::all_of(out.residual_constraints.begin(), out.residual_constraints.end(),
                                  [](const Scalar& s) { return s.total_degree() == 1; });
  if (linear) {
    // Solve in t-coordinates and pull the result back to unknown coordinates.
    std::vector<std::string> ts;
    for (std::size_t s = 0; s < out.linear_basis.size(); ++s) ts.push_back("t" + std::to_string(s + 1));
    LinearSystem reduced{ts, {}};
    for (const auto& c : out.residual_constraints) reduced.add_linear_form(c);
    auto t_basis = nullspace(reduced.rows, ts.size());
    std::vector<RationalRow> combined;
    for (const auto& tv : t_basis) {
      RationalRow row(n);
      for (std::size_t s = 0; s < tv.size(); ++s) {
        for (std::size_t u = 0; u < n; ++u) row[u] += tv[s] * out.linear_basis[s][u];
      }
      combined.push_back(std::move(row));
    }
    out.linear_basis = rref(combined, n);
    out.family = family_from_basis(base, unknowns, out.linear_basis);
    out.residual_constraints.clear();
    out.residual_linear_solved = true;
  }
  return out;
}

}  // namespace confalg
