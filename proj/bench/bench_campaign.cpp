// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "relkummer/cli.hpp"
#include "relkummer/random.hpp"

using namespace relkummer;

namespace {

const CampaignConfig kConfig{20, 3, 2, "GF(19)", 3, 5, 42};

void BM_CampaignParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign(kConfig).passed());
}

void BM_CampaignSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign_serial(kConfig).passed());
}

FpMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FpMatrix m(n, n, 7);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<std::uint32_t>(uniform_below(rng, 7));
  }
  return m;
}

void BM_MultiplyParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FpMatrix a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(fp::multiply(a, b));
}

void BM_MultiplySerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FpMatrix a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(fp::multiply_serial(a, b));
}

}  // namespace

BENCHMARK(BM_CampaignParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CampaignSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Arg(32)->Arg(128)->Arg(256);
BENCHMARK(BM_MultiplySerial)->Arg(32)->Arg(128)->Arg(256);

BENCHMARK_MAIN();
