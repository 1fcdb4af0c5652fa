#include <doctest.h>

#include "confalg/coeff.hpp"
#include "generators.hpp"

using namespace confalg;
using namespace confalg::testing;

namespace {

const SymbolPoly d = SymbolPoly::symbol(Symbol::D);
const SymbolPoly l = SymbolPoly::symbol(Symbol::Lambda);

LambdaBracket rab_lambda(const GradedBilinearMap& circ, const GradedBilinearMap& bracket) {
  return build_quadratic_bracket(make_quadratic(circ, bracket, StarMode::Doubled));
}

/// Closed form for * = 2o: (m-n)(b o a)_{m+n-1} + [b,a]_{m+n}.
ModeExpr closed_form(const GradedBilinearMap& circ, const GradedBilinearMap& bracket, std::size_t a, Mode m,
                     std::size_t b, Mode n) {
  ModeExpr out;
  for (std::size_t k = 0; k < circ.dim(); ++k) {
    out += ModeExpr::mode(k, m + n - 1, Scalar(m - n) * circ.constant(b, a, k));
    out += ModeExpr::mode(k, m + n, bracket.constant(b, a, k));
  }
  return out;
}

/// alpha with a single entry alpha_i(p, q) = 1 on R_00.
CocycleAnsatz entry(unsigned i, std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  CocycleAnsatz a(2, 3);
  for (auto [p, q] : pairs) a.set(i, p, q, Scalar(1));
  return a;
}

Parity parity_of(const ModeExpr& x, const SuperSpace& s) {
  Parity p = Parity::Even;
  bool first = true;
  for (const auto& [key, c] : x.terms()) {
    if (first) p = s.parity(key.first);
    CHECK(s.parity(key.first) == p);
    first = false;
  }
  return p;
}

}  // namespace

TEST_CASE("mode expressions") {
  const SuperSpace s = make_space({{"L", Parity::Even}, {"W", Parity::Even}});
  const ModeExpr x = ModeExpr::mode(0, 3, Scalar(2)) - ModeExpr::mode(1, -1);
  CHECK(x.to_string(s) == "2 L_3 - W_-1");
  CHECK((x - x).is_zero());
  CHECK(x.coefficient(0, 3) == Scalar(2));
  CHECK(x.central(1) == Scalar(-1));
  CHECK((Scalar(0) * x).is_zero());
  CHECK(cube_grid(-1, 1).size() == 27);
}

TEST_CASE("derivative rule and the central generator") {
  const LambdaBracket ext = extend_bracket(rab_lambda(rab_circ(), rab_bracket(0, 0)), CocycleAnsatz(2, 3));
  const CoeffAlgebra c(ext);
  CHECK(c.mode_of(0, 1, 4) == ModeExpr::mode(0, 3, Scalar(-4)));
  CHECK(c.mode_of(0, 2, 4) == ModeExpr::mode(0, 2, Scalar(12)));
  CHECK(c.mode_of(2, 0, -1) == ModeExpr::mode(2, -1));
  CHECK(c.mode_of(2, 0, 0).is_zero());
  CHECK(c.mode_of(2, 1, 0).is_zero());
  CHECK(c.mode_of(d * VPoly::basis(1), 2) == ModeExpr::mode(1, 1, Scalar(-2)));
  CHECK_THROWS_AS(c.mode_of(l * VPoly::basis(1), 2), std::invalid_argument);
}

TEST_CASE("closed formulas for the two-parameter algebra") {
  const CoeffAlgebra c(rab_lambda(rab_circ_symbolic(), rab_bracket_symbolic()));
  const Scalar a = Scalar::variable(0, 2), b = Scalar::variable(1, 2);
  for (Mode m = -4; m <= 4; ++m)
    for (Mode n = -4; n <= 4; ++n) {
      CHECK(c.bracket(0, m, 1, n) == ModeExpr::mode(0, m + n - 1, Scalar(m - n)) + ModeExpr::mode(0, m + n, a));
      CHECK(c.bracket(1, m, 1, n) == ModeExpr::mode(1, m + n - 1, Scalar(m - n)) + ModeExpr::mode(0, m + n, b));
      CHECK(c.bracket(0, m, 0, n).is_zero());
      CHECK(c.bracket(1, m, 0, n).is_zero());
      CHECK(coeff_bracket(c, 0, m, 1, n) == c.bracket(0, m, 1, n));
    }
  CHECK(c.bracket(0, 3, 1, -2).to_string(c.space()) == "5 L_0 + a L_1");
}

TEST_CASE("doubled-star closed form on random data") {
  Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const SuperSpace space = random_space(rng, rng.index(3) + 1);
    const GradedBilinearMap circ = random_map(rng, space, 0.4), bracket = random_map(rng, space, 0.4);
    const CoeffAlgebra c(rab_lambda(circ, bracket));
    for (int sample = 0; sample < 10; ++sample) {
      const std::size_t a = rng.index(space.dim()), b = rng.index(space.dim());
      const Mode m = rng.integer(-5, 5), n = rng.integer(-5, 5);
      CHECK(c.bracket(a, m, b, n) == closed_form(circ, bracket, a, m, b, n));
    }
  }
}

TEST_CASE("zero bracket and current algebras") {
  const SuperSpace s = make_space({{"x", Parity::Even}, {"t", Parity::Odd}});
  const CoeffAlgebra zero{LambdaBracket(s)};
  CHECK(zero.bracket(0, 2, 1, -3).is_zero());
  CHECK(check_coeff_leibniz(zero, cube_grid(-1, 1)).passed());
  Rng rng(62);
  for (int trial = 0; trial < 30; ++trial) {
    const SuperSpace space = random_space(rng, rng.index(3) + 1);
    const GradedBilinearMap b = random_map(rng, space, 0.5);
    const CoeffAlgebra c(build_current(b));
    for (int sample = 0; sample < 10; ++sample) {
      const std::size_t i = rng.index(space.dim()), j = rng.index(space.dim());
      const Mode m = rng.integer(-5, 5), n = rng.integer(-5, 5);
      ModeExpr expected;
      for (std::size_t k = 0; k < space.dim(); ++k) expected += ModeExpr::mode(k, m + n, b.constant(i, j, k));
      CHECK(c.bracket(i, m, j, n) == expected);
    }
  }
}

TEST_CASE("parity preservation") {
  Rng rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    const SuperSpace space = random_space(rng, 3);
    const CoeffAlgebra c(random_lambda_bracket(rng, space, 3, 0.5));
    for (int sample = 0; sample < 10; ++sample) {
      const std::size_t i = rng.index(3), j = rng.index(3);
      const ModeExpr x = c.bracket(i, rng.integer(-4, 4), j, rng.integer(-4, 4));
      if (!x.is_zero()) CHECK(parity_of(x, space) == space.parity(i) + space.parity(j));
    }
  }
}

TEST_CASE("coefficient Leibniz identity") {
  const CoeffAlgebra symbolic(rab_lambda(rab_circ_symbolic(), rab_bracket_symbolic()));
  CHECK(check_coeff_leibniz(symbolic, cube_grid(-2, 2)).passed());
  CHECK_THROWS_AS(check_coeff_leibniz(symbolic, {}), std::invalid_argument);

  // Drop the d-part of [L_l W]: the (m-n) L_{m+n-1} term loses its m+n-1 half.
  LambdaBracket corrupted = rab_lambda(rab_circ(), rab_bracket(1, 1));
  corrupted.set(0, 1, VPoly::term(0, SymbolPoly(Scalar(2)) * l + SymbolPoly(Scalar(1))));
  const AxiomReport r = check_coeff_leibniz(CoeffAlgebra(corrupted), cube_grid(-2, 2));
  REQUIRE_FALSE(r.passed());
  CHECK(r.failures()[0].identity == "coeff-leibniz");
  CHECK_FALSE(r.failures()[0].residual_text.empty());
}

TEST_CASE("conformal Leibniz implies coefficient Leibniz") {
  Rng rng(64);
  int leibniz = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const LambdaBracket b = trial % 2 ? build_quadratic_bracket(random_passing(rng, StarMode::Explicit, 2))
                                      : random_lambda_bracket(rng, random_space(rng, 2), 1, 0.3);
    if (!check_conformal_leibniz(b).passed()) continue;
    ++leibniz;
    CHECK(check_coeff_leibniz(CoeffAlgebra(b), cube_grid(-2, 2)).passed());
  }
  CHECK(leibniz > 10);
}

TEST_CASE("phi cocycles of R_00") {
  const LambdaBracket r00 = rab_lambda(rab_circ(), rab_bracket(0, 0));
  const CoeffAlgebra c(r00);
  const PhiCocycle gamma(entry(1, {{0, 1}, {1, 1}}), 1);
  const PhiCocycle beta(entry(3, {{0, 1}, {1, 1}}), 3);
  for (Mode m = -4; m <= 4; ++m)
    for (Mode n = -4; n <= 4; ++n) {
      CHECK(gamma(0, m, 1, n) == Scalar(m + n == 0 ? m : 0));
      CHECK(beta(1, m, 1, n) == Scalar(m + n - 2 == 0 ? m * (m - 1) * (m - 2) : 0));
      CHECK(gamma(1, m, 0, n).is_zero());
    }
  const auto grid = cube_grid(-3, 3);
  CHECK(check_phi_cocycle(c, gamma, grid).passed());
  CHECK(check_phi_cocycle(c, beta, grid).passed());
  const auto all = build_phi_cocycles(CocycleAnsatz(2, 3));
  CHECK(all.size() == 4);
  for (const auto& phi : all) {
    CHECK(phi(0, 1, 1, -1).is_zero());
    CHECK(check_phi_cocycle(c, phi, cube_grid(-1, 1)).passed());
  }
  // alpha_1(L,L) = 1 is not a cocycle of R_00.
  const AxiomReport bad = check_phi_cocycle(c, PhiCocycle(entry(1, {{0, 0}}), 1), grid);
  REQUIRE_FALSE(bad.passed());
  CHECK(bad.failures()[0].identity == "phi-cocycle");
}

TEST_CASE("extended mode brackets of R_00") {
  const LambdaBracket r00 = rab_lambda(rab_circ(), rab_bracket(0, 0));
  CocycleAnsatz family(2, 3);
  const Scalar g = Scalar::variable(0, 2), b = Scalar::variable(1, 2);
  for (std::size_t p : {0, 1}) {
    family.set(1, p, 1, g);
    family.set(3, p, 1, b);
  }
  const CoeffAlgebra ext(extend_bracket(r00, family, {"gamma", "beta"}));
  const PhiCocycle phi(family);
  for (Mode m = -4; m <= 4; ++m)
    for (Mode n = -4; n <= 4; ++n) {
      const Scalar expected = Scalar(m + n == 0 ? m : 0) * g + Scalar(m + n == 2 ? m * (m - 1) * (m - 2) : 0) * b;
      CHECK(ext.bracket(0, m, 1, n).central(2) == expected);
      CHECK(ext.bracket(1, m, 1, n).central(2) == expected);
      CHECK(phi(0, m, 1, n) == expected);
      CHECK(ext.bracket(0, m, 1, n).coefficient(0, m + n - 1) == Scalar(m - n));
    }
  CHECK(check_coeff_leibniz(ext, cube_grid(-2, 2)).passed());
  CHECK(ext.bracket(0, 3, 1, -1).to_string(ext.space()) == "4 L_1 + 6*beta c_-1");
}
