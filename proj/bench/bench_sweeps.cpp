// Serial reference sweeps against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "wittmod/verify.hpp"

namespace {

using namespace wittmod;

struct Fixture {
  ModuleModel model;
  std::vector<WittTerm> terms;
  std::vector<Poly> fs;

  Fixture(Family family, int n, int kmax, int degmax) : model(ModuleModel::standard(ModuleSpec(family, n))) {
    for (const auto& t : basis_terms(model.spec.algebra(), n, kmax)) {
      if (model.spec.admits(t)) terms.push_back(t);
    }
    fs = test_monomials(model.spec.context(), degmax);
  }
};

void BM_AxiomSerial(benchmark::State& state) {
  Fixture fx(Family::Omega, static_cast<int>(state.range(0)), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::axiom_sweep_serial(fx.model, fx.terms, fx.fs));
}

void BM_AxiomParallel(benchmark::State& state) {
  Fixture fx(Family::Omega, static_cast<int>(state.range(0)), 2, 2);
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::axiom_sweep_parallel(fx.model, fx.terms, fx.fs, jobs));
}

void BM_ShiftSerial(benchmark::State& state) {
  Fixture fx(Family::OmegaS, 2, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::shift_sweep_serial(fx.model, fx.terms, fx.fs));
}

void BM_ShiftParallel(benchmark::State& state) {
  Fixture fx(Family::OmegaS, 2, static_cast<int>(state.range(0)), 3);
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::shift_sweep_parallel(fx.model, fx.terms, fx.fs, jobs));
}

}  // namespace

BENCHMARK(BM_AxiomSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AxiomParallel)->Args({1, 2})->Args({2, 2})->Args({2, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShiftSerial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShiftParallel)->Args({2, 2})->Args({4, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
