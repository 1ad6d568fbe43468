#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "surfenum/enumerate.hpp"
#include "walks.hpp"

using namespace surfenum;

namespace {

const std::vector<std::string> kFiles{"knot_6_1.pd", "knot_7_2.pd", "knot_7_4.pd", "knot_8_16.pd", "knot_7_1.pd"};

const AugmentedDualGraph& graph(std::size_t i) {
  static std::vector<AugmentedDualGraph> cache = [] {
    std::vector<AugmentedDualGraph> out;
    for (const auto& f : kFiles) {
      std::ifstream in(std::string(SURFENUM_FIXTURE_DIR) + "/" + f);
      std::stringstream ss;
      ss << in.rdbuf();
      out.push_back(build_dual(build_diagram(parse_pd(ss.str()))));
    }
    return out;
  }();
  return cache.at(i);
}

// jobs: 1 = serial reference, 0 = every hardware thread.
void BM_WordSearch(benchmark::State& state) {
  const auto& g = graph(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  const detail::WalkLimits limits{24, 4};
  std::size_t words = 0;
  for (auto _ : state) {
    detail::NodeGuard guard(kDefaultGuardCap);
    detail::WalkStats stats;
    auto out = jobs == 1 ? detail::closed_words_serial(g, limits, guard, stats)
                         : detail::closed_words_parallel(g, limits, jobs, guard, stats);
    words = out.size();
    benchmark::DoNotOptimize(out);
  }
  state.SetLabel(kFiles[state.range(0)] + (jobs == 1 ? " serial" : " parallel"));
  state.counters["words"] = static_cast<double>(words);
}

void BM_MultisetSearch(benchmark::State& state) {
  const auto& g = graph(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  detail::NodeGuard walk_guard(kDefaultGuardCap);
  detail::WalkStats stats;
  std::vector<CurveWord> words;
  for (const auto& w : detail::closed_words_serial(g, {24, 4}, walk_guard, stats))
    if (check_word(g, w).empty()) words.push_back(w);
  const detail::ConfigSearch search{2, 4};
  std::size_t sets = 0;
  for (auto _ : state) {
    detail::NodeGuard guard(kDefaultGuardCap);
    auto out = jobs == 1 ? detail::balanced_multisets_serial(words, g.crossing_count(), search, guard)
                         : detail::balanced_multisets_parallel(words, g.crossing_count(), search, jobs, guard);
    sets = out.size();
    benchmark::DoNotOptimize(out);
  }
  state.SetLabel(kFiles[state.range(0)] + (jobs == 1 ? " serial" : " parallel"));
  state.counters["words"] = static_cast<double>(words.size());
  state.counters["multisets"] = static_cast<double>(sets);
}

void BM_General(benchmark::State& state) {
  const auto& g = graph(state.range(0));
  EnumerationOptions opts;
  opts.jobs = static_cast<int>(state.range(1));
  std::size_t total = 0;
  for (auto _ : state) {
    auto r = enumerate_general(g, budgets(2), opts);
    total = r.total();
    benchmark::DoNotOptimize(r);
  }
  state.SetLabel(kFiles[state.range(0)] + (opts.jobs == 1 ? " serial" : " parallel"));
  state.counters["configurations"] = static_cast<double>(total);
}

void fixture_args(benchmark::internal::Benchmark* b) {
  for (int f = 0; f < 4; ++f)
    for (int jobs : {1, 0}) b->Args({f, jobs});
}

}  // namespace

BENCHMARK(BM_WordSearch)->Apply(fixture_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MultisetSearch)->Args({1, 1})->Args({1, 0})->Args({4, 1})->Args({4, 0})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_General)->Apply(fixture_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
