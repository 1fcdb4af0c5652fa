#include <benchmark/benchmark.h>

#include "confalg/coeff.hpp"
#include "confalg/extensions.hpp"

using namespace confalg;

namespace {

SuperSpace lw(std::vector<std::string> params = {}) {
  return SuperSpace({{"L", Parity::Even}, {"W", Parity::Even}}, std::move(params));
}

// W o L = L, W o W = W with [W,L] = aL, [W,W] = bL.
QuadraticData two_dim(long a, long b) {
  GradedBilinearMap circ(lw()), bracket(lw());
  circ.set(1, 0, 0, Scalar(1));
  circ.set(1, 1, 1, Scalar(1));
  bracket.set(1, 0, 0, Scalar(a));
  bracket.set(1, 1, 0, Scalar(b));
  return make_quadratic(circ, bracket, StarMode::Doubled);
}

QuadraticData two_dim_symbolic() {
  const SuperSpace s = lw({"a", "b"});
  GradedBilinearMap circ(s), bracket(s);
  circ.set(1, 0, 0, Scalar::constant(1, 2));
  circ.set(1, 1, 1, Scalar::constant(1, 2));
  bracket.set(1, 0, 0, Scalar::variable(0, 2));
  bracket.set(1, 1, 0, Scalar::variable(1, 2));
  return make_quadratic(circ, bracket, StarMode::Doubled);
}

void conformal_leibniz_symbolic(benchmark::State& state) {
  const LambdaBracket b = build_quadratic_bracket(two_dim_symbolic());
  for (auto _ : state) benchmark::DoNotOptimize(check_conformal_leibniz(b).passed());
}
BENCHMARK(conformal_leibniz_symbolic);

void structure_equations(benchmark::State& state) {
  const QuadraticData q = two_dim_symbolic();
  for (auto _ : state) benchmark::DoNotOptimize(check_structure_equations_t(q).passed());
}
BENCHMARK(structure_equations);

void structured_solver(benchmark::State& state) {
  const QuadraticData q = two_dim(1, -2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_central_ext_anl(q.circ, q.bracket).space.dimension());
}
BENCHMARK(structured_solver);

void direct_solver(benchmark::State& state) {
  const QuadraticData q = two_dim(1, -2);
  const LambdaBracket b = build_quadratic_bracket(q);
  const AnsatzLayout layout = AnsatzLayout::up_to(q.space(), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_central_ext_direct(b, layout).dimension());
}
BENCHMARK(direct_solver)->Arg(3)->Arg(5);

void coeff_leibniz_grid(benchmark::State& state) {
  const CoeffAlgebra c(build_quadratic_bracket(two_dim(1, -2)));
  const auto grid = cube_grid(-static_cast<Mode>(state.range(0)), static_cast<Mode>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_coeff_leibniz(c, grid).passed());
}
BENCHMARK(coeff_leibniz_grid)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
