// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <invmap/invcheck.hpp>
#include <invmap/rng.hpp>
#include <invmap/search.hpp>
#include <invmap/stg.hpp>

using namespace invmap;

namespace {

// Shuffled triangular instance: the checker accepts it, so the benchmark
// measures the full marking loop, not an early reject.
VectorialMapping accepted_instance(unsigned n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::uint32_t> pivots(n), rows(n);
  for (unsigned i = 0; i < n; ++i) pivots[i] = rows[i] = i;
  for (unsigned i = 0; i + 1 < n; ++i) {
    std::swap(pivots[i], pivots[i + rng.below(n - i)]);
    std::swap(rows[i], rows[i + rng.below(n - i)]);
  }
  std::vector<AnfFunction> outs(n, AnfFunction::zero(n));
  for (unsigned k = 0; k < n; ++k) {
    std::vector<Monomial> monomials;
    monomials.emplace_back(std::vector<std::uint32_t>{pivots[k]});
    for (std::uint64_t e = 0, extras = rng.below(4); e < extras && k > 0; ++e) {
      std::vector<std::uint32_t> vars;
      for (std::uint64_t d = 0, deg = 1 + rng.below(2); d < deg; ++d)
        vars.push_back(pivots[rng.below(k)]);
      monomials.emplace_back(std::move(vars));
    }
    outs[rows[k]] = AnfFunction(n, std::move(monomials));
  }
  return VectorialMapping(n, std::move(outs));
}

VectorialMapping full_period_20() {
  return mapping_from_text(
      "n = 20\n"
      "f16 = x17 ^ x4*x11\n"
      "f13 = x14 ^ x13\n"
      "f4 = x5 ^ x1\n");
}

void BM_CheckTheorem1(benchmark::State& state) {
  const auto m = accepted_instance(static_cast<unsigned>(state.range(0)), 42);
  for (auto _ : state) {
    auto outcome = check_theorem1(m);
    benchmark::DoNotOptimize(outcome);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CheckTheorem1)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_BruteForceOracle(benchmark::State& state) {
  const auto m = accepted_instance(static_cast<unsigned>(state.range(0)), 7);
  for (auto _ : state) {
    auto result = brute_force_invertible(m);
    benchmark::DoNotOptimize(result);
  }
  state.SetComplexityN(std::int64_t{1} << state.range(0));
}
BENCHMARK(BM_BruteForceOracle)->DenseRange(8, 16, 2)->Complexity();

void BM_Apply20(benchmark::State& state) {
  const auto m = full_period_20();
  State s = 1;
  for (auto _ : state) {
    s = apply(m, s);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Apply20);

void BM_PeriodFullCycle20(benchmark::State& state) {
  const auto m = full_period_20();
  for (auto _ : state) {
    auto period = period_from(m, 1);
    benchmark::DoNotOptimize(period);
  }
}
BENCHMARK(BM_PeriodFullCycle20)->Unit(benchmark::kMillisecond);

void BM_MoebiusRoundTrip(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  SplitMix64 rng(11);
  std::vector<Monomial> monomials;
  for (int i = 0; i < 24; ++i) {
    std::vector<std::uint32_t> vars;
    for (std::uint64_t d = 0, deg = 1 + rng.below(3); d < deg; ++d)
      vars.push_back(static_cast<std::uint32_t>(rng.below(n)));
    monomials.emplace_back(std::move(vars));
  }
  const AnfFunction f(n, std::move(monomials));
  for (auto _ : state) {
    auto g = anf_from_truth_table(truth_table(f));
    benchmark::DoNotOptimize(g);
  }
  state.SetComplexityN(std::int64_t{1} << n);
}
BENCHMARK(BM_MoebiusRoundTrip)->DenseRange(10, 20, 2)->Complexity()->Unit(benchmark::kMicrosecond);

void BM_SearchCandidates(benchmark::State& state) {
  SearchConfig cfg;
  cfg.n = 12;
  cfg.op_budget = 6;
  cfg.max_modified = 3;
  cfg.rng_seed = 1;
  cfg.candidate_limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto result = run_search(cfg);
    benchmark::DoNotOptimize(result);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SearchCandidates)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
