// Pipeline stage timings at a few spacings.

#include <benchmark/benchmark.h>

#include "rbffd/manufactured.hpp"
#include "rbffd/system.hpp"

namespace {

using namespace rbffd;

double spacing(const benchmark::State& state) { return 1.0 / static_cast<double>(state.range(0)); }

void BM_DiscretizeDisc(benchmark::State& state) {
    const double h = spacing(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(discretize_disc(h, 0));
    }
}

void BM_BuildStencils(benchmark::State& state) {
    const auto nodes = discretize_disc(spacing(state), 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_stencils(nodes, stencil_size(2)));
    }
    state.counters["N"] = static_cast<double>(nodes.size());
}

void BM_ComputeWeights(benchmark::State& state) {
    const int m = static_cast<int>(state.range(1));
    const auto nodes = discretize_disc(spacing(state), 0);
    const auto stencils = build_stencils(nodes, stencil_size(m));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_weights(nodes, stencils, m));
    }
    state.counters["N"] = static_cast<double>(nodes.size());
}

void BM_Bicgstab(benchmark::State& state) {
    const auto nodes = discretize_disc(spacing(state), 0);
    const auto stencils = build_stencils(nodes, stencil_size(2));
    const auto weights = compute_weights(nodes, stencils, 2);
    const ManufacturedProblem problem{1.0};
    auto system = assemble(nodes, stencils, weights);
    system.rhs = build_rhs(nodes, [&](const Point& p) { return problem.f(p); },
                           [&](const Point& p) { return problem.u(p); });
    std::vector<double> x0(nodes.size(), 0.0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes.is_boundary(i)) x0[i] = system.rhs[i];
    }
    std::size_t iterations = 0;
    for (auto _ : state) {
        const auto result = bicgstab(system.A, system.rhs, {}, x0);
        iterations = result.iterations;
        benchmark::DoNotOptimize(result.x.data());
    }
    state.counters["N"] = static_cast<double>(nodes.size());
    state.counters["iters"] = static_cast<double>(iterations);
}

void BM_SolvePoisson(benchmark::State& state) {
    const double h = spacing(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_poisson(h, 2, 0, 1.0));
    }
}

}  // namespace

BENCHMARK(BM_DiscretizeDisc)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildStencils)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComputeWeights)->Args({50, 2})->Args({50, 4})->Args({50, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Bicgstab)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolvePoisson)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
