// Representation-level microbenchmarks: the primitive operations in
// isolation, then whole searches on small generated instances.

#include <benchmark/benchmark.h>

#include <random>

#include "hg/baseline_graph.hpp"
#include "hg/hybrid_graph.hpp"
#include "hg/instance_io.hpp"
#include "hg/solvers.hpp"

namespace {

using namespace hg;

SimpleGraph graph_for(const benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    return gen_random_gnm(n, static_cast<long long>(n) * (n - 1) / 4, 1).graph;
}

std::vector<Edge> query_pairs(int n, int count) {
    std::mt19937_64 rng(2);
    std::vector<Edge> out;
    while (static_cast<int>(out.size()) < count) {
        const auto u = static_cast<Vertex>(rng() % n);
        const auto v = static_cast<Vertex>(rng() % n);
        if (u != v) out.push_back({u, v});
    }
    return out;
}

void BM_AdjacencyHybrid(benchmark::State& state) {
    const SimpleGraph g = graph_for(state);
    auto [h, f] = HybridGraph::build(g.n, g.edges);
    const auto q = query_pairs(g.n, 4096);
    std::size_t i = 0;
    for (auto _ : state) {
        const Edge e = q[i++ & 4095];
        benchmark::DoNotOptimize(h.is_adjacent(f, e.u, e.v));
    }
}

void BM_AdjacencyAlist(benchmark::State& state) {
    const SimpleGraph g = graph_for(state);
    BaselineGraph b(g.n, g.edges);
    const auto q = query_pairs(g.n, 4096);
    std::size_t i = 0;
    for (auto _ : state) {
        const Edge e = q[i++ & 4095];
        benchmark::DoNotOptimize(b.adjacent(e.u, e.v));
    }
}

// Delete every edge of a vertex's neighborhood by deleting the vertex, then
// undo; both halves are timed.
void BM_DeleteVertexHybrid(benchmark::State& state) {
    const SimpleGraph g = graph_for(state);
    auto [h, f] = HybridGraph::build(g.n, g.edges);
    const SearchFrame saved = h.snapshot(f);
    Vertex v = 0;
    for (auto _ : state) {
        h.delete_vertex(f, v);
        h.restore(f, saved);
        v = (v + 1) % g.n;
    }
}

void BM_DeleteVertexAlist(benchmark::State& state) {
    const SimpleGraph g = graph_for(state);
    BaselineGraph b(g.n, g.edges);
    const auto mark = b.save();
    Vertex v = 0;
    for (auto _ : state) {
        b.delete_vertex(v);
        b.undo_to(mark);
        v = (v + 1) % g.n;
    }
}

template <Repr R>
void BM_VertexCover(benchmark::State& state) {
    const SimpleGraph g = gen_phat(static_cast<int>(state.range(0)), 2, 1).graph;
    SolveOptions opt;
    opt.repr = R;
    for (auto _ : state) benchmark::DoNotOptimize(solve_vc_opt(g, opt).value);
}

template <Repr R>
void BM_DominatingSet(benchmark::State& state) {
    const SimpleGraph g = gen_random_gnm(static_cast<int>(state.range(0)), state.range(0) * 8, 1).graph;
    SolveOptions opt;
    opt.repr = R;
    for (auto _ : state) benchmark::DoNotOptimize(solve_ds_opt(g, opt).value);
}

}  // namespace

BENCHMARK(BM_AdjacencyHybrid)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_AdjacencyAlist)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_DeleteVertexHybrid)->Arg(64)->Arg(256);
BENCHMARK(BM_DeleteVertexAlist)->Arg(64)->Arg(256);
BENCHMARK(BM_VertexCover<Repr::kHybrid>)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VertexCover<Repr::kAlist>)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DominatingSet<Repr::kHybrid>)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DominatingSet<Repr::kAlist>)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
