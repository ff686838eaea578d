#include <benchmark/benchmark.h>

#include "qes2d/oracle.hpp"
#include "qes2d/sweep.hpp"

using namespace qes2d;

namespace {

void spectrum_sweep(benchmark::State& state, Exec exec) {
  SweepSpec spec;
  spec.n = {0, static_cast<int>(state.range(0))};
  spec.s = {-5, 5};
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_table(spec, exec));
  state.SetItemsProcessed(state.iterations() * spec.n.size() * spec.s.size());
}

void fd_spectrum(benchmark::State& state, Exec exec) {
  const int n = 4;
  auto grid = RadialGrid::default_for(n, 1);
  grid.num_points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fd_raw_kappas(n, 1, grid, n + 1, exec));
}

}  // namespace

BENCHMARK_CAPTURE(spectrum_sweep, serial, Exec::Serial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(spectrum_sweep, parallel, Exec::Parallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(fd_spectrum, serial, Exec::Serial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(fd_spectrum, parallel, Exec::Parallel)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
