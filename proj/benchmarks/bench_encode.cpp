#include <benchmark/benchmark.h>

#include "alcfit/benchgen.hpp"
#include "alcfit/cnf.hpp"
#include "alcfit/encoder.hpp"

using namespace alcfit;

namespace {

// Name-semantics clauses on a large type stand-in, counted without storage.
void BM_NameSemantics(benchmark::State& state) {
  const bool typed = state.range(0) != 0;
  const auto gen = gen_type_stand_in(2000, 40, 30, 1);
  const Interpretation& I = gen.sample.interpretation();
  const TypeTable types = compute_types(I);
  for (auto _ : state) {
    VarMap vm(4, OperatorSet::all(), I.signature());
    CountingSink sink;
    ClauseWriter out(vm, sink);
    if (typed) encode_semantics_typed(I, types, out);
    else encode_semantics_base(I, out);
    benchmark::DoNotOptimize(sink.total());
  }
  state.SetLabel(typed ? "typed" : "base");
}
BENCHMARK(BM_NameSemantics)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BuildEncoding(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto gen = gen_hitting_set_instance({{1, 3}, {2, 4}}, 2);
  for (auto _ : state) {
    Encoding enc = build_encoding(gen.sample, k, OperatorSet::all(), {});
    benchmark::DoNotOptimize(enc.cnf.num_clauses());
  }
}
BENCHMARK(BM_BuildEncoding)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_Templates(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto [cnf, vm] = encode_syntax(k, OperatorSet::all(), Signature{{"A", "B"}, {"r", "s"}});
    ClauseWriter out(vm, cnf);
    encode_templates(out, 10);
    benchmark::DoNotOptimize(cnf.num_clauses());
  }
}
BENCHMARK(BM_Templates)->DenseRange(6, 14, 4)->Unit(benchmark::kMillisecond);

}  // namespace
