#include <benchmark/benchmark.h>

#include "entcolor/bounds.hpp"
#include "entcolor/engine.hpp"
#include "entcolor/families.hpp"
#include "entcolor/presets.hpp"
#include "entcolor/records.hpp"

namespace ec = entcolor;

namespace {

ec::Graph ring_with_chords(int n) {
  std::vector<ec::Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  for (int i = 0; i < n / 2; i += 2) edges.push_back({i, (i + n / 2) % n});
  return ec::Graph(n, edges);
}

void BM_EngineRun(benchmark::State& state, const std::string& family) {
  auto g = ring_with_chords(static_cast<int>(state.range(0)));
  auto fam = ec::make_family(family, g, nullptr, {});
  std::uint64_t seed = 0;
  for (auto _ : state) {
    ec::EngineInput in;
    in.kappa = 6;
    in.seed = seed++;
    in.budget = 4000;
    auto res = ec::run(*fam, in);
    benchmark::DoNotOptimize(res.record.steps.size());
  }
}
BENCHMARK_CAPTURE(BM_EngineRun, acyclic_v2, std::string("acyclic-v2"))->Arg(12)->Arg(16);
BENCHMARK_CAPTURE(BM_EngineRun, nonrep_vertex, std::string("nonrep-vertex"))->Arg(10)->Arg(12);

void BM_Decode(benchmark::State& state) {
  auto g = ring_with_chords(14);
  ec::AcyclicGammaFamily fam(g, ec::max_common_neighbors(g));
  ec::EngineInput in;
  in.kappa = 3;
  in.budget = 2000;
  auto res = ec::run(fam, in);
  for (auto _ : state) benchmark::DoNotOptimize(ec::decode(fam, res.phi, res.record));
}
BENCHMARK(BM_Decode);

void BM_CountB(benchmark::State& state) {
  std::vector<ec::CountTerm> terms{{3, 1}, {5, 2}, {41, 4}};
  for (auto _ : state) benchmark::DoNotOptimize(ec::count_b(terms, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CountB)->Arg(50)->Arg(200);

void BM_OptimizeRatio(benchmark::State& state) {
  ec::PresetParams p;
  p.delta = static_cast<int>(state.range(0));
  auto q = ec::kappa_preset("acyclic-v2", p).q;
  for (auto _ : state) benchmark::DoNotOptimize(ec::optimize_ratio(q));
}
BENCHMARK(BM_OptimizeRatio)->Arg(30)->Arg(1000);

void BM_OptimalAlpha(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ec::optimal_alpha(27));
}
BENCHMARK(BM_OptimalAlpha);

}  // namespace

BENCHMARK_MAIN();
