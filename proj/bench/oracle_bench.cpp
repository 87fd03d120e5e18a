// Serial vs OpenMP oracle kernels on a fixed indefinite ternary quartic.

#include <benchmark/benchmark.h>

#include "qpd/numeric_oracle.hpp"
#include "qpd/oracle_kernels.hpp"
#include "qpd/ternary_classifier.hpp"

namespace {

const qpd::TernaryQuartic& sample_tensor() {
  static const qpd::TernaryQuartic t = qpd::SignClassTensor{1, 1, -1, -1, -1, 1, qpd::Rational(2)}.to_tensor();
  return t;
}

template <bool Parallel>
void BM_EvaluateSeeds(benchmark::State& state) {
  const auto seeds = qpd::kernels::hemisphere_seeds<3>(static_cast<int>(state.range(0)));
  std::vector<double> values(seeds.size());
  for (auto _ : state) {
    if constexpr (Parallel) {
      qpd::kernels::evaluate_seeds_parallel<3>(sample_tensor(), seeds, values);
    } else {
      qpd::kernels::evaluate_seeds_serial<3>(sample_tensor(), seeds, values);
    }
    benchmark::DoNotOptimize(values.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(seeds.size()));
}

template <bool Parallel>
void BM_RefineStarts(benchmark::State& state) {
  const auto seeds = qpd::kernels::hemisphere_seeds<3>(16);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<qpd::Point<double, 3>> starts(seeds.begin(), seeds.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<qpd::kernels::Refined<3>> out(n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      qpd::kernels::refine_starts_parallel<3>(sample_tensor(), starts, 500, 1e-12, out);
    } else {
      qpd::kernels::refine_starts_serial<3>(sample_tensor(), starts, 500, 1e-12, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_MinOnSphere(benchmark::State& state) {
  const auto exec = state.range(0) ? qpd::Execution::Parallel : qpd::Execution::Serial;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpd::min_on_sphere(sample_tensor(), qpd::OracleConfig{}, exec).min_value);
  }
}

}  // namespace

BENCHMARK(BM_EvaluateSeeds<false>)->Arg(64)->Arg(256);
BENCHMARK(BM_EvaluateSeeds<true>)->Arg(64)->Arg(256);
BENCHMARK(BM_RefineStarts<false>)->Arg(32)->Arg(128);
BENCHMARK(BM_RefineStarts<true>)->Arg(32)->Arg(128);
BENCHMARK(BM_MinOnSphere)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
