#include <benchmark/benchmark.h>

#include "xde/calculus.hpp"
#include "xde/exact.hpp"
#include "xde/normalize.hpp"
#include "xde/parser.hpp"
#include "xde/trajectories.hpp"

using namespace xde;

static void BM_parse(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(parse("3*x^4*y - 2*x*y^3 + exp(2*x + y)*cos(x - 3*y)"));
}
BENCHMARK(BM_parse);

static void BM_normalize_expand(benchmark::State& state) {
    Expr e = parse("(x + y + 1)^6");
    for (auto _ : state) benchmark::DoNotOptimize(normalize(e));
}
BENCHMARK(BM_normalize_expand);

static void BM_diff(benchmark::State& state) {
    Expr e = parse("x^3*exp(2*x + y)*cos(x - 3*y) - ln(x^2 + 1)*y^4");
    for (auto _ : state) benchmark::DoNotOptimize(diff(e, Var::X));
}
BENCHMARK(BM_diff);

static void BM_harmonic_conjugate(benchmark::State& state) {
    DifferentialForm f = form_from_potential(parse("x^4 - 6*x^2*y^2 + y^4"));
    for (auto _ : state) benchmark::DoNotOptimize(harmonic_conjugate(f));
}
BENCHMARK(BM_harmonic_conjugate);

static void BM_trace_level_curve(benchmark::State& state) {
    Expr f = parse("x^2 + y^2");
    for (auto _ : state)
        benchmark::DoNotOptimize(trace_level_curve(f, {1, 0}, 0.01, 1000));
}
BENCHMARK(BM_trace_level_curve);

static void BM_orthogonality_audit(benchmark::State& state) {
    Expr u = parse("exp(x)*cos(y)"), v = parse("exp(x)*sin(y)");
    Grid g{0, 1, 0.1, 1.4, 20, 20};
    for (auto _ : state) benchmark::DoNotOptimize(orthogonality_audit(u, v, g));
}
BENCHMARK(BM_orthogonality_audit);

BENCHMARK_MAIN();
