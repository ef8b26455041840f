#include <benchmark/benchmark.h>

#include <cmath>

#include "opsplit/reference.hpp"
#include "opsplit/spectral.hpp"
#include "opsplit/splitting.hpp"

using namespace opsplit;

namespace {

RealField fixture(std::size_t n) {
  return RealField::sample(Grid(n), [](double x) { return 0.5 * std::sin(x) + 0.25 * std::cos(2.0 * x); });
}

void BM_RoundTrip(benchmark::State& state) {
  const RealField u = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inverse(forward(u)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RoundTrip)->RangeMultiplier(2)->Range(64, 4096)->Complexity(benchmark::oNLogN);

void BM_LinearStep(benchmark::State& state) {
  const RealField u = fixture(static_cast<std::size_t>(state.range(0)));
  const Symbol kdv = make_symbol("kdv");
  for (auto _ : state) benchmark::DoNotOptimize(linear_step(u, kdv, 0.01));
}
BENCHMARK(BM_LinearStep)->Arg(256)->Arg(1024);

void BM_BurgersStep(benchmark::State& state) {
  const RealField u = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(burgers_step(u, 0.01));
}
BENCHMARK(BM_BurgersStep)->Arg(256)->Arg(1024);

void BM_CompositeStep(benchmark::State& state) {
  const RealField u = fixture(256);
  SchemeConfig cfg;
  cfg.scheme = state.range(0) == 0 ? Scheme::Godunov : Scheme::Strang;
  cfg.dt = 0.01;
  for (auto _ : state) benchmark::DoNotOptimize(composite_step(u, cfg));
  state.SetLabel(to_string(cfg.scheme));
}
BENCHMARK(BM_CompositeStep)->Arg(0)->Arg(1);

void BM_ReferenceStep(benchmark::State& state) {
  ReferenceSolver solver(fixture(static_cast<std::size_t>(state.range(0))), make_symbol("kdv"), 1e-4);
  for (auto _ : state) solver.advance(1);
}
BENCHMARK(BM_ReferenceStep)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
