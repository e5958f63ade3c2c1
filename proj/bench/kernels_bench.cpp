#include <benchmark/benchmark.h>

#include "lgt/eigen.hpp"
#include "lgt/fields.hpp"
#include "lgt/kd.hpp"
#include "lgt/lattice.hpp"
#include "lgt/rng.hpp"
#include "lgt/verification.hpp"

using namespace lgt;

namespace {

std::vector<double> random_symmetric(std::size_t n) {
  Rng rng(1);
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a[i * n + j] = a[j * n + i] = rng.uniform(-1.0, 1.0);
  }
  return a;
}

template <Tridiagonal (*Reduce)(std::vector<double>&, std::size_t, std::vector<double>*)>
void BM_Tridiagonalize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_symmetric(n);
  for (auto _ : state) {
    auto w = a;
    benchmark::DoNotOptimize(Reduce(w, n, nullptr));
  }
}

template <double (*Sum)(int, long long)>
void BM_GridSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Sum(3, state.range(0)));
}

template <OneForm (*Apply)(const OneForm&)>
void BM_Maxwell(benchmark::State& state) {
  Rng rng(2);
  const Lattice lat(3, static_cast<int>(state.range(0)));
  const auto w = random_box_one_form(rng, lat);
  for (auto _ : state) benchmark::DoNotOptimize(Apply(w));
}

}  // namespace

BENCHMARK(BM_Tridiagonalize<kernels::tridiagonalize_serial>)->Name("tridiagonalize/serial")->Arg(200)->Arg(600);
BENCHMARK(BM_Tridiagonalize<kernels::tridiagonalize_omp>)->Name("tridiagonalize/omp")->Arg(200)->Arg(600);
BENCHMARK(BM_GridSum<reference::d_dim_log_integral>)->Name("grid_sum/serial")->Arg(64)->Arg(128);
BENCHMARK(BM_GridSum<d_dim_log_integral>)->Name("grid_sum/omp")->Arg(64)->Arg(128);
BENCHMARK(BM_Maxwell<reference::apply_maxwell>)->Name("maxwell/reference")->Arg(8)->Arg(24);
BENCHMARK(BM_Maxwell<apply_maxwell>)->Name("maxwell/fused")->Arg(8)->Arg(24);

BENCHMARK_MAIN();
