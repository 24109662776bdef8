#include "futaki/analysis.hpp"
#include "futaki/scenario.hpp"
#include "futaki/toric.hpp"
#include "futaki/toric_kernels.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

using namespace futaki;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

// Cube [-1, 1]^n with a fixed pseudo-random set of extra cuts.
struct CutCube {
    std::size_t n;
    std::vector<IntVector> normals;
    std::vector<Rational> offsets;
};

CutCube cut_cube(std::size_t n, int cuts) {
    CutCube c{n, {}, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::int64_t s : {1, -1}) {
            IntVector e(n, 0);
            e[i] = s;
            c.normals.push_back(e);
            c.offsets.emplace_back(1);
        }
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<int> coord(-1, 1);
    for (int j = 0; j < cuts; ++j) {
        IntVector a(n, 0);
        while (std::all_of(a.begin(), a.end(), [](auto v) { return v == 0; }))
            for (auto& x : a) x = coord(gen);
        c.normals.push_back(a);
        c.offsets.emplace_back(3, 2);
    }
    return c;
}

const CutCube& shape() {
    static const CutCube c = cut_cube(5, 10);
    return c;
}

void BM_EnumerateVertices(benchmark::State& state) {
    const auto& c = shape();
    for (auto _ : state) {
        auto v = state.range(0) ? kernels::enumerate_vertices_parallel(c.n, c.normals, c.offsets)
                                : kernels::enumerate_vertices_serial(c.n, c.normals, c.offsets);
        benchmark::DoNotOptimize(v);
    }
}

void BM_IntegratePolytope(benchmark::State& state) {
    const auto& c = shape();
    const auto q = realize(c.n, c.normals, c.offsets, Execution::parallel);
    for (auto _ : state) {
        auto r = integrate_polytope(q, std::nullopt, mode(state));
        benchmark::DoNotOptimize(r);
    }
}

void BM_CrossValidate(benchmark::State& state) {
    const auto f = load_catalog("hultgren-c-lattice");
    const auto samples = equispaced({f.scenario.parameter->lower, f.scenario.parameter->upper}, 16);
    for (auto _ : state) {
        auto r = cross_validate(f.scenario, f.toric->polytopes, f.toric->direction, samples, mode(state));
        benchmark::DoNotOptimize(r);
    }
}

}  // namespace

BENCHMARK(BM_EnumerateVertices)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntegratePolytope)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossValidate)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
