#include <benchmark/benchmark.h>

#include "pstein/operators.hpp"
#include "pstein/random.hpp"
#include "pstein/recovery.hpp"
#include "pstein/solvers.hpp"
#include "pstein/stein_transform.hpp"

namespace {

using namespace pstein;

LinearMatrixEquation make_equation(int m, const PeriodicOperator& op,
                                   double coeff_scale) {
  Rng rng = split_rng(2024, static_cast<std::uint64_t>(m));
  Matrix a = random_matrix(rng, m, m);
  Matrix b = random_matrix(rng, m, m);
  const Matrix c = random_matrix(rng, m, m);
  a = a * (coeff_scale / frob_norm(a));
  b = b * (coeff_scale / frob_norm(b));
  return LinearMatrixEquation(a, b, c, op);
}

void bm_build_stein(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const LinearMatrixEquation eq =
      make_equation(m, perm_similarity_op(primary_permutation(m)), 0.8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_stein(eq));
  }
}
BENCHMARK(bm_build_stein)->Arg(4)->Arg(8)->Arg(16);

void bm_solve_direct(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const SteinSystem sys = build_stein(make_equation(m, hermitian_op(), 0.8));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_direct(sys));
  }
}
BENCHMARK(bm_solve_direct)->Arg(4)->Arg(8)->Arg(16);

void bm_solve_smith(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const SteinSystem sys = build_stein(make_equation(m, hermitian_op(), 0.8));
  SolverConfig cfg;
  cfg.method = SolveMethod::kSmith;
  cfg.tol = 1e-10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_smith(sys, cfg));
  }
}
BENCHMARK(bm_solve_smith)->Arg(4)->Arg(8)->Arg(16);

void bm_solve_r_smith(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const SteinSystem sys = build_stein(make_equation(m, hermitian_op(), 0.8));
  SolverConfig cfg;
  cfg.method = SolveMethod::kRSmith;
  cfg.tol = 1e-10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_r_smith(sys, cfg));
  }
}
BENCHMARK(bm_solve_r_smith)->Arg(4)->Arg(8)->Arg(16);

void bm_recover(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const LinearMatrixEquation eq = make_equation(m, transpose_op(), 0.8);
  const Matrix stein = solve_direct(build_stein(eq));
  for (auto _ : state) {
    benchmark::DoNotOptimize(recover(eq, stein));
  }
}
BENCHMARK(bm_recover)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
