#include <benchmark/benchmark.h>

#include "sofic/corpus.hpp"
#include "sofic/invariants.hpp"

namespace {

const char* kEven = "A 1 A\nA 0 B\nB 0 A\n";

sofic::Presentation even_shift() { return sofic::load_presentation(kEven); }

void BM_MinimalAutomaton(benchmark::State& state) {
  auto p = even_shift();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sofic::minimal_automaton(p));
  }
}
BENCHMARK(BM_MinimalAutomaton);

void BM_TransitionSemigroup(benchmark::State& state) {
  auto d = sofic::minimal_automaton(even_shift());
  for (auto _ : state) {
    benchmark::DoNotOptimize(sofic::transition_semigroup(d));
  }
}
BENCHMARK(BM_TransitionSemigroup);

void BM_AnalyzeShift(benchmark::State& state) {
  auto h = sofic::make_shift("even", even_shift());
  for (auto _ : state) {
    benchmark::DoNotOptimize(sofic::analyze_shift(h));
  }
}
BENCHMARK(BM_AnalyzeShift);

void BM_CompareExpansion(benchmark::State& state) {
  auto p = even_shift();
  auto a = sofic::analyze_shift(sofic::make_shift("even", p));
  auto b = sofic::analyze_shift(
      sofic::make_shift("even_x", sofic::symbol_expansion(p, "0", "d")));
  for (auto _ : state) {
    sofic::SearchBudget budget;
    benchmark::DoNotOptimize(sofic::compare_shifts(a, b, budget));
  }
}
BENCHMARK(BM_CompareExpansion);

void BM_CorpusInstance(benchmark::State& state) {
  for (auto _ : state) {
    sofic::CorpusGenerator gen(7);
    benchmark::DoNotOptimize(
        sofic::analyze_shift(sofic::make_shift("c", gen.next())));
  }
}
BENCHMARK(BM_CorpusInstance);

}  // namespace

BENCHMARK_MAIN();
