#include <benchmark/benchmark.h>

#include <random>

#include "crown/crownverify.hpp"
#include "crown/heat.hpp"
#include "crown/jordan.hpp"
#include "crown/sl2lab.hpp"

using namespace crown;

static void BM_E8Witnesses(benchmark::State& state) {
  const auto sys = rootsys::build_from_name("E8");
  for (auto _ : state)
    benchmark::DoNotOptimize(crownverify::certify_boundary_witnesses(sys, rootsys::CorootConvention::kCanonical));
}
BENCHMARK(BM_E8Witnesses)->Unit(benchmark::kMillisecond);

static void BM_JordanHessian(benchmark::State& state) {
  auto alg = jordan::JordanAlgebra::make(jordan::Kind::kSymR, static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  const auto z = jordan::sample_member(alg, rng);
  for (auto _ : state) benchmark::DoNotOptimize(jordan::hessian_matrix(z));
}
BENCHMARK(BM_JordanHessian)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

static void BM_SPi(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sl2::s_pi(1.0, 0.7));
}
BENCHMARK(BM_SPi)->Unit(benchmark::kMicrosecond);

static void BM_HeatKernel(benchmark::State& state) {
  const sl2::HeatKernel<double> k(0.5, 2.0);
  double r = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(k(r));
    r = r > 2 ? 0 : r + 0.01;
  }
}
BENCHMARK(BM_HeatKernel);

static void BM_HeatKernelCrown(benchmark::State& state) {
  const sl2::HeatKernel<double> k(0.5, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(k.crown({0.6, 0.3}));
}
BENCHMARK(BM_HeatKernelCrown)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
