#include <benchmark/benchmark.h>

#include "ambt/builders.hpp"
#include "ambt/solver.hpp"
#include "ambt/weighted_matching.hpp"
#include "planted.hpp"

namespace {

using namespace ambt;

// Full solve() on planted yes-instances with 200 vertices (201 for odd k).
void BM_SolvePlanted(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    Rng rng(7 + k);
    auto inst = bench::planted_yes_instance(200 + k % 2, k, 5, rng);
    std::uint64_t seed = 0, trials = 0;
    for (auto _ : state) {
        SolveReport r = solve(inst.graph, inst.ell, {.seed = seed++});
        if (!r.answer.yes) state.SkipWithError("planted instance answered no");
        trials += r.trials_run;
        benchmark::DoNotOptimize(r);
    }
    state.counters["trials"] = benchmark::Counter(static_cast<double>(trials), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_SolvePlanted)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_SolveOnce(benchmark::State& state) {
    Rng rng(11);
    auto inst = bench::planted_yes_instance(200, 2, static_cast<std::size_t>(state.range(0)), rng);
    std::uint64_t i = 0;
    for (auto _ : state) {
        Rng r = Rng::for_stream(1, i++);
        benchmark::DoNotOptimize(solve_once(inst.graph, inst.ell, r));
    }
}
BENCHMARK(BM_SolveOnce)->Arg(1)->Arg(10)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_MaxWeightMatching(benchmark::State& state) {
    Rng rng(3);
    const auto n = static_cast<std::size_t>(state.range(0));
    MultiGraph g = random_graph(n, 8.0 / static_cast<double>(n), rng);
    WeightedInstance inst{g, std::vector<Weight>(g.edge_id_bound()), 0};
    for (EdgeId e : g.edges()) inst.weights[e] = static_cast<Weight>(1 + rng.below(100));
    for (auto _ : state) benchmark::DoNotOptimize(max_weight_matching(inst));
}
BENCHMARK(BM_MaxWeightMatching)->RangeMultiplier(2)->Range(50, 800)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
