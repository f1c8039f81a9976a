#include <benchmark/benchmark.h>

#include <random>

#include "frankl/family.hpp"
#include "frankl/search.hpp"
#include "frankl/symmetry.hpp"
#include "frankl/weights.hpp"

namespace {

using namespace frankl;

const Family k533 = Family::of({{0, 1, 2}, {0, 1, 3}, {0, 2, 4}});
const WeightFn k533w{6, 5, 5, 3, 3};

const Family k634 = Family::of({{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}});
const WeightFn k634w{1, 1, 1, 1, 1, 1};

void BM_Ssn533(benchmark::State& state) {
  for (auto _ : state) {
    Verdict v = ssn_refined(k533, k533w);
    benchmark::DoNotOptimize(v);
    state.counters["nodes"] = static_cast<double>(v.stats.nodes);
  }
}
BENCHMARK(BM_Ssn533)->Unit(benchmark::kMillisecond);

void BM_Ssn634(benchmark::State& state) {
  for (auto _ : state) {
    Verdict v = ssn_refined(k634, k634w);
    benchmark::DoNotOptimize(v);
    state.counters["nodes"] = static_cast<double>(v.stats.nodes);
  }
}
BENCHMARK(BM_Ssn634)->Unit(benchmark::kMillisecond);

void BM_SsnUnprunedBound(benchmark::State& state) {
  for (auto _ : state) {
    Verdict v = ssn_refined(k533, k533w, {.bound_prune = false});
    benchmark::DoNotOptimize(v);
    state.counters["nodes"] = static_cast<double>(v.stats.nodes);
  }
}
BENCHMARK(BM_SsnUnprunedBound)->Unit(benchmark::kMillisecond);

void BM_Closure(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const unsigned n = static_cast<unsigned>(state.range(0));
  std::uniform_int_distribution<SetCode> pick(0, range_code(n));
  std::vector<SetCode> members(12);
  for (SetCode& a : members) a = pick(rng);
  const Family f(members);
  for (auto _ : state) {
    Family c = closure(f);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Closure)->Arg(6)->Arg(8)->Arg(10);

void BM_InsertCloseState(benchmark::State& state) {
  const ShareTable table(k634w, range_code(6));
  const Family fc = closure(k634);
  for (auto _ : state) {
    SearchState s(table);
    for (SetCode h = 0; h < 64; h += 5) s.insert_close(fc.members(), h, table);
    benchmark::DoNotOptimize(s.share());
  }
}
BENCHMARK(BM_InsertCloseState);

void BM_Nef533(benchmark::State& state) {
  const auto candidates = gen_families(5, 3, 3);
  const auto perms = all_permutations(5);
  for (auto _ : state) {
    auto reps = nef(candidates, perms);
    benchmark::DoNotOptimize(reps);
  }
}
BENCHMARK(BM_Nef533)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
