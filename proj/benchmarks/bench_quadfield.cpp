#include <benchmark/benchmark.h>

#include <quadfield/quadfield.hpp>

using namespace quadfield;

namespace {

Kind kind_arg(const benchmark::State& state) { return static_cast<Kind>(state.range(0)); }

Quad sample(Kind k) { return Quad(k, 0.7, -0.3, 0.2, 0.1); }

void kinds(benchmark::internal::Benchmark* b)
{
    for (Kind k : all_kinds)
        b->Arg(static_cast<int>(k));
}

void BM_mul(benchmark::State& state)
{
    const Kind k = kind_arg(state);
    Quad u = sample(k), v = Quad(k, 0.9, 0.1, -0.2, 0.05);
    for (auto _ : state) {
        benchmark::DoNotOptimize(u);
        benchmark::DoNotOptimize(v);
        benchmark::DoNotOptimize(mul(u, v));
    }
}
BENCHMARK(BM_mul)->Apply(kinds);

void BM_inverse(benchmark::State& state)
{
    const Quad u = sample(kind_arg(state));
    for (auto _ : state) benchmark::DoNotOptimize(inverse(u));
}
BENCHMARK(BM_inverse)->Apply(kinds);

void BM_exp(benchmark::State& state)
{
    const Quad u = sample(kind_arg(state));
    for (auto _ : state) benchmark::DoNotOptimize(exp(u));
}
BENCHMARK(BM_exp)->Apply(kinds);

void BM_log(benchmark::State& state)
{
    const Quad u = exp(sample(kind_arg(state)));
    for (auto _ : state) benchmark::DoNotOptimize(log(u));
}
BENCHMARK(BM_log)->Apply(kinds);

void BM_cosexp(benchmark::State& state)
{
    double x = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cosexp_all(CosexpFamily::PolarG, x));
        x += 1e-9;
    }
}
BENCHMARK(BM_cosexp);

void BM_factor(benchmark::State& state)
{
    const Kind k = kind_arg(state);
    const Poly p{k, {Quad::one(k), sample(k), Quad::real(k, -0.5), Quad(k, 0.1, 0.2, 0.3, 0.4)}};
    for (auto _ : state) benchmark::DoNotOptimize(factor(p));
}
BENCHMARK(BM_factor)->Apply(kinds);

void BM_integrate_loop(benchmark::State& state)
{
    const Quad center(Kind::Circular, 0.3, -0.2, 0.1, 0.4);
    CircleSpec spec;
    spec.center = center;
    spec.samples = static_cast<int>(state.range(0));
    const Loop loop = circle_loop(spec);
    const QuadFn f = [&](const Quad& u) { return inverse(sub(u, center)); };
    for (auto _ : state) benchmark::DoNotOptimize(integrate_loop(f, loop));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_integrate_loop)->Arg(256)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
