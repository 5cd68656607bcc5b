#include <benchmark/benchmark.h>

#include "irvmargin/bounds.hpp"
#include "irvmargin/distance.hpp"
#include "irvmargin/oracle.hpp"
#include "irvmargin/search.hpp"

namespace {

using namespace irvmargin;

Election worked_example() {
  return parse_election(
      "candidates: A,B,C,D\n"
      "40: A,C,B,D\n"
      "21: B,C,A,D\n"
      "10: C,A,B,D\n"
      "10: C,A,D\n"
      "5: D,B,C,A\n");
}

void BM_Tabulate(benchmark::State& state) {
  auto e = random_election(1, static_cast<std::size_t>(state.range(0)), 100000, 500);
  for (auto _ : state) benchmark::DoNotOptimize(run_irv(e));
}
BENCHMARK(BM_Tabulate)->Arg(4)->Arg(8)->Arg(16);

void BM_Lb2(benchmark::State& state) {
  auto e = random_election(2, 8, 50000, 400);
  EliminationOrder pi{0, 3, 5};
  for (auto _ : state) benchmark::DoNotOptimize(lb2(e, pi));
}
BENCHMARK(BM_Lb2);

void BM_DistanceLeaf(benchmark::State& state) {
  auto e = worked_example();
  EliminationOrder pi{3, 1, 0, 2};
  for (auto _ : state) benchmark::DoNotOptimize(distance_to(pi, e, Mode::modify, true));
}
BENCHMARK(BM_DistanceLeaf);

template <Algorithm A>
void BM_Search(benchmark::State& state) {
  auto e = random_election(static_cast<std::uint64_t>(state.range(1)),
                           static_cast<std::size_t>(state.range(0)), 2000, 40);
  std::size_t lps = 0;
  for (auto _ : state) {
    auto r = run_algorithm(A, e);
    lps = r.stats.lps_solved;
    benchmark::DoNotOptimize(r.margin);
  }
  state.counters["lps"] = static_cast<double>(lps);
}
BENCHMARK_TEMPLATE(BM_Search, Algorithm::margin)
    ->Args({4, 7})->Args({5, 7})->Args({6, 7})->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Search, Algorithm::mrsw)
    ->Args({4, 7})->Args({5, 7})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
