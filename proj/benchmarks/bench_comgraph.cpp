#include <benchmark/benchmark.h>

#include <random>

#include "comgraph/analysis.hpp"
#include "comgraph/group_spec.hpp"

using namespace comgraph;

namespace {

const char* const kSpecs[] = {"W(7)", "wr(sym(3), 3)", "wr(sym(4), 2)", "ult(5, 2)", "W(13)"};

GroupPtr cached(std::size_t i) {
  static std::vector<GroupPtr> groups(std::size(kSpecs));
  if (!groups[i]) groups[i] = build_group(parse_spec(kSpecs[i]));
  return groups[i];
}

void BM_Enumerate(benchmark::State& state) {
  const auto spec = parse_spec(kSpecs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(build_group(spec));
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_Enumerate)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Multiply(benchmark::State& state) {
  const auto g = cached(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g->order() - 1));
  std::vector<ElementId> ids(1024);
  for (auto& x : ids) x = pick(rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g->multiply(ids[i & 1023], ids[(i + 1) & 1023]));
    ++i;
  }
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_Multiply)->DenseRange(0, 3);

void BM_GraphBuild(benchmark::State& state) {
  const auto g = cached(state.range(0));
  g->center();
  for (auto _ : state) benchmark::DoNotOptimize(CommutingGraph::build(g, GraphMode::transversal, 1));
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_GraphBuild)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Diameter(benchmark::State& state) {
  const auto g = cached(state.range(0));
  const auto graph = CommutingGraph::build(g, GraphMode::transversal, 1);
  for (auto _ : state) benchmark::DoNotOptimize(diameter(graph, static_cast<unsigned>(state.range(1))));
  state.SetLabel(kSpecs[state.range(0)]);
  state.counters["vertices"] = static_cast<double>(graph.vertex_count());
}
BENCHMARK(BM_Diameter)->ArgsProduct({{0, 1, 2, 3}, {1, 0}})->Unit(benchmark::kMillisecond);

void BM_WCertificates(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(w_certificates(7));
}
BENCHMARK(BM_WCertificates)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
