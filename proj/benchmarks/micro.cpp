#include <benchmark/benchmark.h>

#include "pcx/bench.hpp"
#include "pcx/bnb.hpp"
#include "pcx/interval.hpp"
#include "pcx/relaxation.hpp"
#include "pcx/solver.hpp"

namespace {

const char* kRastrigin =
    "20 + x1^2 + x2^2 - 10*(cos(2*pi*x1) + cos(2*pi*x2))";

void BM_Parse(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(pcx::Expression::parse(kRastrigin, 2));
}
BENCHMARK(BM_Parse);

void BM_TapeEvaluate(benchmark::State& state) {
    pcx::SymbolicDerivatives d(pcx::Expression::parse(kRastrigin, 2));
    std::vector<double> x{1.3, -2.7}, scratch;
    for (auto _ : state)
        benchmark::DoNotOptimize(d.value_tape().evaluate_single(x, scratch));
}
BENCHMARK(BM_TapeEvaluate);

void BM_GradientTape(benchmark::State& state) {
    pcx::SymbolicDerivatives d(pcx::Expression::parse(kRastrigin, 2));
    std::vector<double> x{1.3, -2.7}, g(2), scratch;
    for (auto _ : state) {
        d.gradient_tape().evaluate(x, g, scratch);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_GradientTape);

void BM_HessianBounds(benchmark::State& state) {
    pcx::SymbolicDerivatives d(pcx::Expression::parse(kRastrigin, 2));
    pcx::BoxRegion box{{-5.12, -5.12}, {5.12, 5.12}};
    for (auto _ : state)
        benchmark::DoNotOptimize(pcx::hessian_interval_bounds(d, box));
}
BENCHMARK(BM_HessianBounds);

void BM_MinimizeOnBox(benchmark::State& state) {
    pcx::SymbolicDerivatives d(pcx::Expression::parse(kRastrigin, 2));
    pcx::BoxRegion box{{-5.12, -5.12}, {5.12, 5.12}};
    auto cert = pcx::compute_alpha(pcx::hessian_interval_bounds(d, box), box);
    pcx::SolverConfig cfg;
    for (auto _ : state)
        benchmark::DoNotOptimize(pcx::minimize_on_box(d, box, cert.alpha, cfg));
}
BENCHMARK(BM_MinimizeOnBox);

void BM_SolveTestDim2(benchmark::State& state) {
    auto inst = pcx::find_instance("TestDim_2");
    auto f = pcx::Expression::parse(inst->formula, inst->dimension);
    pcx::SolverConfig cfg;
    for (auto _ : state)
        benchmark::DoNotOptimize(pcx::solve(f, inst->box, cfg));
}
BENCHMARK(BM_SolveTestDim2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
