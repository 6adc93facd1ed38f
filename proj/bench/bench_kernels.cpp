// Serial reference kernels against their OpenMP counterparts, plus the
// chirp-z fast transform against the direct sum.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "wsp/bases.hpp"
#include "wsp/kernels.hpp"
#include "wsp/wtransform.hpp"

namespace {

using wsp::cplx;

std::vector<cplx> random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<cplx> v(n);
  for (cplx& x : v) x = cplx(d(rng), d(rng));
  return v;
}

std::vector<double> axis(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return v;
}

template <bool Parallel>
void BM_DirectSum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::vector<double> u = axis(-8.0, 8.0, n);
  const std::vector<double> p = axis(-8.0, 8.0, n);
  const std::vector<cplx> w = random_vector(n, 1);
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(wsp::kernels::omp::direct_sum(u, w, p, -1, 1.0));
    } else {
      benchmark::DoNotOptimize(wsp::kernels::serial::direct_sum(u, w, p, -1, 1.0));
    }
  }
  state.SetComplexityN(state.range(0));
}

template <bool Parallel>
void BM_Matvec(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::vector<cplx> flat = random_vector(n * n, 2);
  wsp::DenseMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = flat[i * n + j];
  }
  const std::vector<cplx> v = random_vector(n, 3);
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(wsp::kernels::omp::matvec(a, v));
    } else {
      benchmark::DoNotOptimize(wsp::kernels::serial::matvec(a, v));
    }
  }
}

template <bool Parallel>
void BM_Wigner(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::vector<cplx> g = random_vector(n, 4);
  const std::vector<double> p = axis(-6.0, 6.0, 241);
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(wsp::kernels::omp::wigner(g, 0.02, p));
    } else {
      benchmark::DoNotOptimize(wsp::kernels::serial::wigner(g, 0.02, p));
    }
  }
}

template <bool Fast>
void BM_Forward(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const wsp::Superpotential W = wsp::validate({1.0, 0.0, 1.0});
  const wsp::GridPtr g = wsp::uniform_x_grid(-3.0, 3.0, n);
  const wsp::GridPtr p = wsp::uniform_p_grid(-8.0, 8.0, n);
  const wsp::SampledSignal f = wsp::ho_eigenstate(W, g, 3).signal;
  for (auto _ : state) {
    if constexpr (Fast) {
      benchmark::DoNotOptimize(wsp::forward_fast(W, f, p));
    } else {
      benchmark::DoNotOptimize(wsp::forward(W, f, p));
    }
  }
}

}  // namespace

BENCHMARK(BM_DirectSum<false>)->Name("direct_sum/serial")->RangeMultiplier(4)->Range(256, 4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectSum<true>)->Name("direct_sum/omp")->RangeMultiplier(4)->Range(256, 4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Matvec<false>)->Name("matvec/serial")->Arg(512)->Arg(2048)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Matvec<true>)->Name("matvec/omp")->Arg(512)->Arg(2048)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Wigner<false>)->Name("wigner/serial")->Arg(1001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Wigner<true>)->Name("wigner/omp")->Arg(1001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Forward<false>)->Name("forward/direct")->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Forward<true>)->Name("forward/fast")->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
