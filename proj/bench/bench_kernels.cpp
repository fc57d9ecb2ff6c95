#include <benchmark/benchmark.h>

#include <random>

#include "fmq/batch.hpp"
#include "fmq/catalog.hpp"
#include "fmq/isometry.hpp"

using namespace fmq;

namespace {

AveragingTrialConfig trial_config(benchmark::State& state) {
  AveragingTrialConfig config;
  config.trials = static_cast<std::size_t>(state.range(0));
  config.seed = 5;
  return config;
}

void BM_AveragingSerial(benchmark::State& state) {
  const AveragingTrialConfig config = trial_config(state);
  for (auto _ : state) benchmark::DoNotOptimize(run_averaging_trials_serial(config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AveragingParallel(benchmark::State& state) {
  const AveragingTrialConfig config = trial_config(state);
  for (auto _ : state) benchmark::DoNotOptimize(run_averaging_trials(config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<ChernCharacter> random_classes(const NumericalSurface& S, std::size_t count) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> d(-50, 50);
  std::vector<ChernCharacter> out;
  for (std::size_t i = 0; i < count; ++i) {
    ChernCharacter e{Int(d(rng)), {Int(d(rng)), Int(d(rng))}, 0};
    e.ch2 = Rat(d(rng)) + make_rat(S.num().square(e.c), 2);
    out.push_back(e);
  }
  return out;
}

void BM_FreenessSerial(benchmark::State& state) {
  const CoverTransfer& t = builtin_catalog().cover("bielliptic_cover_6");
  const auto classes = random_classes(t.cover(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(freeness_batch_serial(t, classes));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FreenessParallel(benchmark::State& state) {
  const CoverTransfer& t = builtin_catalog().cover("bielliptic_cover_6");
  const auto classes = random_classes(t.cover(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(freeness_batch(t, classes));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

// Degree-2 cover of <2> by <2> + <2>; the identity has a one-parameter family of
// candidate lifts, so the box search does real work.
struct SplitCover {
  NumericalSurface base{"split_base", BilinearForm(IntMat{{2}}), 0, 2};
  NumericalSurface cover{"split_cover", BilinearForm(IntMat{{2, 0}, {0, 2}}), 0, 1};
  CoverTransfer t{"split", base, cover, 2, IntMat{{1}, {1}}, IntMat{{1, 1}}};
};

void lift_bench(benchmark::State& state, bool parallel) {
  const SplitCover s;
  const LatticeIsometry id(s.base, s.base, RatMat::identity(3));
  LiftOptions options;
  options.parallel = parallel;
  options.search_bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lift_isometry(id, s.t, s.t, options));
}

void BM_LiftSerial(benchmark::State& state) { lift_bench(state, false); }
void BM_LiftParallel(benchmark::State& state) { lift_bench(state, true); }

}  // namespace

BENCHMARK(BM_AveragingSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AveragingParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FreenessSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FreenessParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LiftSerial)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LiftParallel)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
