#include <random>

#include <benchmark/benchmark.h>

#include "cbn/analysis.hpp"
#include "cbn/minctrl.hpp"
#include "cbn/oracle.hpp"

namespace {

using namespace cbn;

Cbcn random_network(std::size_t n, std::size_t controls, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::vector<VarIndex>> sets(n);
    for (auto& s : sets) {
        for (int d = 0; d < 3; ++d) s.push_back(static_cast<VarIndex>(rng() % n));
    }
    std::vector<VarIndex> c;
    for (VarIndex i = 0; i < controls; ++i) c.push_back(i);
    return Cbcn(Cbn(sets), c);
}

Kernel kernel_of(const benchmark::State& state) { return state.range(1) ? Kernel::Parallel : Kernel::Serial; }

void BM_StateGraph(benchmark::State& state) {
    const auto net = random_network(static_cast<std::size_t>(state.range(0)), 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(state_graph(net, {}, kernel_of(state)));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (state.range(0) + 2)));
}
BENCHMARK(BM_StateGraph)->ArgsProduct({{12, 16, 18}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_MinimalControlSet(benchmark::State& state) {
    const auto net = random_network(static_cast<std::size_t>(state.range(0)), 0, 3);
    MinControlOptions options;
    options.kernel = kernel_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(minimal_control_set(net.base(), options));
}
BENCHMARK(BM_MinimalControlSet)->ArgsProduct({{12, 16, 20}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_CheckControllability(benchmark::State& state) {
    const auto net = random_network(static_cast<std::size_t>(state.range(0)), 1, 5);
    const DependencyGraph g(net);
    for (auto _ : state) benchmark::DoNotOptimize(check_controllability(g));
}
BENCHMARK(BM_CheckControllability)->RangeMultiplier(4)->Range(1 << 8, 1 << 16);

} // namespace

BENCHMARK_MAIN();
