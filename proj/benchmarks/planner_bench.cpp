#include <benchmark/benchmark.h>

#include "skypath/planner.hpp"
#include "skypath/scenario.hpp"

namespace {

using namespace skypath;

const Coverage& preset_coverage() {
  static const Coverage cov = [] {
    const ScenarioPreset p = preset("paper-uma");
    return Coverage(build_radio_maps(generate_environment(p.scene, p.seed), p.epsilon_db));
  }();
  return cov;
}

void BM_BuildRadioMaps(benchmark::State& state) {
  const ScenarioPreset p = preset("paper-uma");
  const Environment env = generate_environment(p.scene, p.seed);
  for (auto _ : state) benchmark::DoNotOptimize(build_radio_maps(env, p.epsilon_db));
}
BENCHMARK(BM_BuildRadioMaps)->Unit(benchmark::kMillisecond);

void BM_PlanPreset(benchmark::State& state) {
  const ScenarioPreset p = preset("paper-uma");
  const Coverage& cov = preset_coverage();
  const int kappa = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PlanResult r = kappa == 1 ? plan_optimal(cov, -45.0, p.start, p.goal)
                              : plan_quantized(cov, -45.0, kappa, p.start, p.goal, RemainderPolicy::kCrop);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_PlanPreset)->Arg(1)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_PlanOpenGrid(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const RadioMapSet maps({RadioMap(1, Region(d * 1.0, 1.0, 90.0), -100.0,
                                   std::vector<float>(static_cast<std::size_t>(d) * d, -40.0F))});
  const Coverage cov(maps);
  for (auto _ : state) benchmark::DoNotOptimize(plan_optimal(cov, -50.0, {0.5, 0.5}, {d - 0.5, d - 0.5}));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(d) * d);
}
BENCHMARK(BM_PlanOpenGrid)->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMillisecond)->Complexity();

}  // namespace

BENCHMARK_MAIN();
