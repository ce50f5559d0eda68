#include <benchmark/benchmark.h>

#include "reforcite/metrics.hpp"
#include "reforcite/models.hpp"

using namespace reforcite;

namespace {

const EvolvingDigraph& shared_graph() {
    static const EvolvingDigraph g = grow_reforcite1(50000, 0.5, 7);
    return g;
}

}  // namespace

static void BM_CountTriangles(benchmark::State& state) {
    const auto& g = shared_graph();
    for (auto _ : state) benchmark::DoNotOptimize(count_triangles(g));
    state.SetItemsProcessed(state.iterations() * std::int64_t(g.edge_count()));
}
BENCHMARK(BM_CountTriangles);

static void BM_InDegreeDistribution(benchmark::State& state) {
    const auto& g = shared_graph();
    for (auto _ : state) {
        auto d = in_degree_distribution(g);
        benchmark::DoNotOptimize(d.n);
    }
}
BENCHMARK(BM_InDegreeDistribution);

static void BM_AvgDiameter(benchmark::State& state) {
    const auto& g = shared_graph();
    DiameterOptions opts;
    opts.schedule.step_size = 5000;
    opts.sample_sources = std::uint32_t(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(avg_diameter(g, opts));
}
BENCHMARK(BM_AvgDiameter)->Arg(2)->Arg(10);

static void BM_ObsolescenceCurve(benchmark::State& state) {
    const auto& g = shared_graph();
    const auto grid = default_o_grid();
    for (auto _ : state) {
        auto curve = obsolescence_curve(g, grid);
        benchmark::DoNotOptimize(curve.size());
    }
}
BENCHMARK(BM_ObsolescenceCurve);

static void BM_NetworkHIndex(benchmark::State& state) {
    const auto& g = shared_graph();
    for (auto _ : state) benchmark::DoNotOptimize(network_h_index(g));
}
BENCHMARK(BM_NetworkHIndex);

BENCHMARK_MAIN();
