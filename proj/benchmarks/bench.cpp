#include <benchmark/benchmark.h>

#include <vector>

#include "vexl/lebesgue.hpp"
#include "vexl/mixed.hpp"
#include "vexl/properties.hpp"
#include "vexl/rng.hpp"
#include "vexl/search.hpp"

using namespace vexl;

static void BM_luxemburg_norm(benchmark::State& state) {
  const std::size_t cells = static_cast<std::size_t>(state.range(0));
  std::vector<double> measures(cells), values(cells);
  std::vector<XReal> p;
  SplitMix64 rng(7);
  for (std::size_t i = 0; i < cells; ++i) {
    measures[i] = rng.log_uniform(0.5, 2.0);
    values[i] = rng.log_uniform(0.1, 2.0);
    p.push_back(i % 4 == 0 ? XReal::infinity() : XReal(rng.log_uniform(1.0, 8.0)));
  }
  Partition part(measures);
  SimpleFunction f(values);
  for (auto _ : state) {
    auto r = luxemburg_norm(f, p, part);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_luxemburg_norm)->Arg(2)->Arg(8)->Arg(64);

static void BM_mixed_norm_counterexample(benchmark::State& state) {
  Instance inst = thm2_instance();
  FunctionSequence sum = add(inst.f, inst.g);
  for (auto _ : state) {
    auto r = mixed_norm(sum, inst.exponents, inst.partition);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_mixed_norm_counterexample);

static void BM_triangle_residual(benchmark::State& state) {
  GenConfig cfg;
  cfg.cell_count_range = {4, 4};
  cfg.seq_len_range = {3, 3};
  cfg.regime_filter = RegimeFilter::QleP;
  cfg.seed = 11;
  Instance inst = gen_instance(cfg);
  for (auto _ : state) {
    double r = triangle_residual(inst.f, inst.g, inst.exponents, inst.partition);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_triangle_residual);

static void BM_search_violations(benchmark::State& state) {
  GenConfig cfg;
  cfg.cell_count_range = {2, 4};
  cfg.seq_len_range = {2, 4};
  cfg.p_weights = {1.0, 0.0, 0.0};
  cfg.q_weights = {0.45, 0.45, 0.1};
  cfg.seed = 3;
  for (auto _ : state) {
    auto w = search_violations(cfg, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_search_violations)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
