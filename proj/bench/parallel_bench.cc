// Serial reference vs OpenMP kernels: the exhaustive oracle sweep and one
// enumeration round over a wide set of parser states.

#include <benchmark/benchmark.h>

#include "dltag/lexicon.h"
#include "dltag/oracle_sweep.h"
#include "dltag/parser.h"

using namespace dltag;

namespace {

void BM_SweepSerial(benchmark::State& state) {
  const SweepConfig config{static_cast<std::size_t>(state.range(0)), 2};
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(config));
}

void BM_SweepParallel(benchmark::State& state) {
  const SweepConfig config{static_cast<std::size_t>(state.range(0)), 2};
  for (auto _ : state) benchmark::DoNotOptimize(sweep_parallel(config));
}

BENCHMARK(BM_SweepSerial)->Arg(7)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(7)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

// Every reading of `n` unmarked clauses; the count grows like the Catalan
// numbers since each clause may elaborate any node on the right frontier.
struct Frontier {
  std::vector<ParserState> states;
  UnitInput next;
};

Frontier frontier_after(std::size_t n) {
  const Lexicon& lex = Lexicon::bundled();
  std::vector<ParserState> states(1);
  for (std::size_t k = 0; k < n; ++k) {
    const std::string id = "u" + std::to_string(k);
    states = expand_serial(states, make_unit_with_markers(id, id, k, {}, lex));
  }
  const std::string id = "u" + std::to_string(n);
  return {std::move(states), make_unit_with_markers(id, id, n, {}, lex)};
}

void BM_ExpandSerial(benchmark::State& state) {
  const Frontier f = frontier_after(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expand_serial(f.states, f.next));
  state.counters["states"] = static_cast<double>(f.states.size());
}

void BM_ExpandParallel(benchmark::State& state) {
  const Frontier f = frontier_after(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand_parallel(f.states, f.next, 0));
  }
  state.counters["states"] = static_cast<double>(f.states.size());
}

BENCHMARK(BM_ExpandSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpandParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
