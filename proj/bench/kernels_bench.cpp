// Serial reference kernels against their OpenMP counterparts. Thread count
// follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <vector>

#include "cubelab/kernels.hpp"
#include "cubelab/random.hpp"

namespace {

using namespace cubelab;

std::vector<double> data(std::size_t n) {
  Rng rng = make_rng(1);
  return gaussian_vector(n, rng);
}

template <void (*Fwht)(std::span<double>)>
void BM_Fwht(benchmark::State& state) {
  const auto input = data(std::size_t{1} << state.range(0));
  std::vector<double> work;
  for (auto _ : state) {
    work = input;
    Fwht(work);
    benchmark::DoNotOptimize(work.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(input.size()));
}
BENCHMARK(BM_Fwht<kernels::serial::fwht>)->Name("fwht/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_Fwht<kernels::omp::fwht>)->Name("fwht/omp")->DenseRange(12, 22, 5);

template <void (*Pyramid)(std::span<const double>, int, std::span<double>)>
void BM_Pyramid(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  const auto f = data(std::size_t{1} << ell);
  std::vector<double> pyr(kernels::pyramid_size(ell));
  for (auto _ : state) {
    Pyramid(f, ell, pyr);
    benchmark::DoNotOptimize(pyr.data());
  }
}
BENCHMARK(BM_Pyramid<kernels::serial::expectation_pyramid>)->Name("pyramid/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_Pyramid<kernels::omp::expectation_pyramid>)->Name("pyramid/omp")->DenseRange(12, 22, 5);

template <void (*Pyramid)(std::span<const double>, int, std::span<double>),
          void (*Derived)(std::span<const double>, int, std::span<double>)>
void BM_Derived(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  const auto f = data(std::size_t{1} << ell);
  std::vector<double> pyr(kernels::pyramid_size(ell)), out(f.size());
  Pyramid(f, ell, pyr);
  for (auto _ : state) {
    Derived(pyr, ell, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_Derived<kernels::serial::expectation_pyramid, kernels::serial::maximal_from_pyramid>)
    ->Name("maximal/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_Derived<kernels::omp::expectation_pyramid, kernels::omp::maximal_from_pyramid>)
    ->Name("maximal/omp")->DenseRange(12, 20, 4);
BENCHMARK(BM_Derived<kernels::serial::expectation_pyramid, kernels::serial::square_from_pyramid>)
    ->Name("square/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_Derived<kernels::omp::expectation_pyramid, kernels::omp::square_from_pyramid>)
    ->Name("square/omp")->DenseRange(12, 20, 4);

template <double (*Sum)(std::span<const double>, double)>
void BM_SumAbsPow(benchmark::State& state) {
  const auto v = data(std::size_t{1} << 20);
  const double p = static_cast<double>(state.range(0)) / 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(Sum(v, p));
}
BENCHMARK(BM_SumAbsPow<kernels::serial::sum_abs_pow>)->Name("sum_abs_pow/serial")->Arg(3)->Arg(5);
BENCHMARK(BM_SumAbsPow<kernels::omp::sum_abs_pow>)->Name("sum_abs_pow/omp")->Arg(3)->Arg(5);

template <kernels::SignSearchResult (*Search)(std::span<const double>, int, int)>
void BM_MaxSignSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = 8;
  const auto a = data(static_cast<std::size_t>(m) * n);
  for (auto _ : state) benchmark::DoNotOptimize(Search(a, m, n));
}
BENCHMARK(BM_MaxSignSum<kernels::serial::max_sign_sum>)->Name("max_sign_sum/serial")->Arg(12)->Arg(18);
BENCHMARK(BM_MaxSignSum<kernels::omp::max_sign_sum>)->Name("max_sign_sum/omp")->Arg(12)->Arg(18);

}  // namespace

BENCHMARK_MAIN();
