#include <benchmark/benchmark.h>

#include "alcfit/benchgen.hpp"
#include "alcfit/fitter.hpp"

using namespace alcfit;

namespace {

void BM_HittingSetFit(benchmark::State& state) {
  const bool templates = state.range(0) != 0;
  const auto gen = gen_hitting_set_instance({{1, 3}, {2, 4}}, 2);
  FitConfig cfg;
  cfg.encoding.templates = templates;
  for (auto _ : state) {
    const FitResult r = bounded_fit(gen.sample, cfg);
    benchmark::DoNotOptimize(r.size());
  }
  state.SetLabel(templates ? "templates" : "no templates");
}
BENCHMARK(BM_HittingSetFit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// Incremental coverage strengthening against a fresh session per bound.
void BM_ApproxRandom(benchmark::State& state) {
  const bool incremental = state.range(0) != 0;
  RandomSampleParams p;
  p.num_elements = 30;
  p.num_concept_names = 3;
  p.edge_density = 0.1;
  p.num_pos = 10;
  p.num_neg = 10;
  p.seed = 12;
  const auto gen = gen_random(p);
  FitConfig cfg;
  cfg.mode = FitMode::approximate;
  cfg.max_size = 6;
  cfg.incremental = incremental;
  for (auto _ : state) {
    const FitResult r = approx_fit(gen.sample, cfg);
    benchmark::DoNotOptimize(r.coverage);
  }
  state.SetLabel(incremental ? "incremental" : "fresh sessions");
}
BENCHMARK(BM_ApproxRandom)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
