#include <qortho/analysis.hpp>
#include <qortho/operators.hpp>
#include <qortho/rodrigues.hpp>
#include <qortho/solver.hpp>

#include <benchmark/benchmark.h>

using namespace qortho;

namespace {

KravchukParams pair_params(long N) {
    return KravchukParams{QContext(Scalar(5, 4)), {Scalar(1, 3), Scalar(1, 2)}, {Scalar(2, 3), Scalar(1, 2)}, N};
}

MultiIndex balanced(long d) { return MultiIndex{d - d / 2, d / 2}; }

} // namespace

static void BM_SolveQ(benchmark::State& state) {
    const long d = state.range(0);
    const auto params = pair_params(10);
    for (auto _ : state) benchmark::DoNotOptimize(solve_type2_q(params, balanced(d)));
}
BENCHMARK(BM_SolveQ)->DenseRange(2, 8, 2);

static void BM_SolveClassical(benchmark::State& state) {
    const long d = state.range(0);
    const ClassicalParams params{{Scalar(1, 4), Scalar(1, 2)}, 10};
    for (auto _ : state) benchmark::DoNotOptimize(solve_type2_classical(params, balanced(d)));
}
BENCHMARK(BM_SolveClassical)->DenseRange(2, 8, 2);

static void BM_RodriguesShifted(benchmark::State& state) {
    const long d = state.range(0);
    const auto params = pair_params(10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rodrigues_q(params, balanced(d), RodriguesForm::lattice_shifted));
    }
}
BENCHMARK(BM_RodriguesShifted)->DenseRange(2, 8, 2);

static void BM_LoweringSpan(benchmark::State& state) {
    const auto params = pair_params(10);
    for (auto _ : state) benchmark::DoNotOptimize(lowering_span_check(params, balanced(state.range(0))));
}
BENCHMARK(BM_LoweringSpan)->DenseRange(2, 6, 2);

static void BM_IsolateRoots(benchmark::State& state) {
    const Poly K = solve_type2_q(pair_params(10), balanced(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(isolate_roots(K, 10));
}
BENCHMARK(BM_IsolateRoots)->DenseRange(2, 8, 2);

static void BM_LimitScan(benchmark::State& state) {
    const ClassicalParams params{{Scalar(1, 4), Scalar(1, 2)}, 6};
    for (auto _ : state) {
        benchmark::DoNotOptimize(limit_scan(params, MultiIndex{1, 1}, Scalar(1, 8), state.range(0)));
    }
}
BENCHMARK(BM_LimitScan)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
