#include <doctest.h>

#include "confalg/errors.hpp"
#include "confalg/superalgebra.hpp"
#include "generators.hpp"

using namespace confalg;
using namespace confalg::testing;

TEST_CASE("super spaces") {
  CHECK_THROWS_AS(SuperSpace(std::vector<BasisVector>{}), std::invalid_argument);
  CHECK_THROWS_AS(make_space({{"x", Parity::Even}, {"x", Parity::Odd}}), std::invalid_argument);
  const SuperSpace s = make_space({{"L", Parity::Even}, {"G", Parity::Odd}});
  CHECK(s.index_of("G") == std::optional<std::size_t>(1));
  CHECK_FALSE(s.index_of("W").has_value());
  CHECK(Parity::Odd + Parity::Odd == Parity::Even);
  CHECK(koszul_sign(Parity::Odd, Parity::Odd) == -1);
  CHECK(koszul_sign(Parity::Odd, Parity::Even) == 1);
  CHECK(koszul_sign(Parity::Even, Parity::Even) == 1);
  const SuperSpace c = s.with_central("c");
  CHECK(c.dim() == 3);
  CHECK(c[2].killed_by_d);
}

TEST_CASE("grading is enforced at construction") {
  GradedBilinearMap m(make_space({{"L", Parity::Even}, {"G", Parity::Odd}}));
  CHECK_THROWS_AS(m.set(0, 1, 0, Scalar(1)), ParityError);
  CHECK_THROWS_AS(m.set(1, 1, 1, Scalar(1)), ParityError);
  CHECK_NOTHROW(m.set(1, 1, 0, Scalar(1)));
  CHECK(m.admissible_targets(0, 1) == std::vector<std::size_t>{1});
}

TEST_CASE("lie superalgebra checker") {
  const SuperSpace mixed = make_space({{"x", Parity::Even}, {"t", Parity::Odd}});
  CHECK(check_lie_superalgebra(GradedBilinearMap(mixed)).passed());

  const AxiomReport r = check_lie_superalgebra(rab_bracket_symbolic());
  CHECK_FALSE(r.passed());
  bool skew_at_wl = false;
  for (const auto& f : r.failures()) {
    if (f.identity == "skew-symmetry" && f.indices == std::vector<std::size_t>{1, 0}) skew_at_wl = true;
  }
  CHECK(skew_at_wl);
  CHECK(check_lie_superalgebra(rab_bracket(0, 0)).passed());

  GradedBilinearMap e(make_space({{"e", Parity::Even}}));
  e.set(0, 0, 0, Scalar(1));
  CHECK_FALSE(check_lie_superalgebra(e).passed());

  // [t, t] = z with t odd is symmetric, as an odd bracket should be.
  GradedBilinearMap heis(make_space({{"z", Parity::Even}, {"t", Parity::Odd}}));
  heis.set(1, 1, 0, Scalar(1));
  CHECK(check_lie_superalgebra(heis).passed());
}

TEST_CASE("leibniz checkers on small examples") {
  GradedBilinearMap nil(make_space({{"e1", Parity::Even}, {"e2", Parity::Even}}));
  nil.set(0, 0, 1, Scalar(1));
  CHECK(check_leibniz_superalgebra(nil).passed());
  CHECK(check_left_leibniz_superalgebra(nil).passed());
  CHECK_FALSE(check_lie_superalgebra(nil).passed());

  const SuperSpace mixed = make_space({{"x", Parity::Even}, {"t", Parity::Odd}});
  CHECK(check_left_leibniz_superalgebra(GradedBilinearMap(mixed)).passed());
}

TEST_CASE("the two-parameter bracket is left Leibniz, not right Leibniz") {
  const GradedBilinearMap b = rab_bracket_symbolic();
  CHECK(check_left_leibniz_superalgebra(b).passed());
  const AxiomReport right = check_leibniz_superalgebra(b);
  CHECK_FALSE(right.passed());
  // The residual at (W, W, L) is a^2 L.
  const Scalar a = Scalar::variable(0, 2);
  bool found = false;
  for (const auto& f : right.failures()) {
    if (f.indices == std::vector<std::size_t>{1, 1, 0}) {
      found = true;
      CHECK((f.residual == VPoly::term(0, SymbolPoly(a * a)) || f.residual == VPoly::term(0, SymbolPoly(-(a * a)))));
    }
  }
  CHECK(found);
  // Its flip is right Leibniz.
  CHECK(check_leibniz_superalgebra(to_left_superalgebra(b)).passed());
}

TEST_CASE("flip sign rule") {
  const GradedBilinearMap flipped = to_left_superalgebra(rab_bracket_symbolic());
  const Scalar a = Scalar::variable(0, 2);
  CHECK(flipped.constant(0, 1, 0) == -a);
  CHECK(flipped(1, 0).is_zero());
  CHECK(to_left_superalgebra(GradedBilinearMap(rab_circ().space())).is_zero());

  GradedBilinearMap odd(make_space({{"x", Parity::Even}, {"t", Parity::Odd}}));
  odd.set(1, 1, 0, Scalar(3));
  odd.set(0, 1, 1, Scalar(2));
  const GradedBilinearMap f = to_left_superalgebra(odd);
  CHECK(f.constant(1, 1, 0) == Scalar(3));
  CHECK(f.constant(1, 0, 1) == Scalar(-2));
  CHECK(to_left_superalgebra(f) == odd);
}

TEST_CASE("left/right duality and lie implies leibniz on random brackets") {
  Rng rng(21);
  int leibniz = 0, lie = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const SuperSpace space = random_space(rng, rng.index(3) + 1);
    GradedBilinearMap b = random_map(rng, space, rng.coin() ? 0.15 : 0.4);
    if (rng.coin(0.3)) b = b + -b.super_flipped();
    const bool right = check_leibniz_superalgebra(b).passed();
    CHECK(right == check_left_leibniz_superalgebra(to_left_superalgebra(b)).passed());
    CHECK(check_left_leibniz_superalgebra(b).passed() == check_leibniz_superalgebra(to_left_superalgebra(b)).passed());
    if (check_lie_superalgebra(b).passed()) {
      ++lie;
      CHECK(right);
      CHECK(check_left_leibniz_superalgebra(b).passed());
    }
    leibniz += right;
  }
  CHECK(leibniz > 20);
  CHECK(lie > 5);
}

TEST_CASE("fail-fast stops at the first failure") {
  GradedBilinearMap e(make_space({{"e", Parity::Even}, {"f", Parity::Even}}));
  e.set(0, 0, 0, Scalar(1));
  e.set(1, 1, 0, Scalar(1));
  CHECK(check_lie_superalgebra(e, {.fail_fast = true}).failures().size() == 1);
  CHECK(check_lie_superalgebra(e).failures().size() > 1);
}
