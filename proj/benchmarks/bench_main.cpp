#include <benchmark/benchmark.h>

#include <cauchy/functions.hpp>
#include <cauchy/interval_eval.hpp>
#include <cauchy/pi01.hpp>
#include <cauchy/prover.hpp>

using namespace cauchy;

// Fresh nodes per iteration so the approximation cache does not hide the work.

static void BM_PiMachin(benchmark::State &state)
{
    const Precision k = state.range(0);
    for (auto _ : state) {
        const CReal x = CReal::integer(16) * atan_rat(mpq_class(1, 5)) - CReal::integer(4) * atan_rat(mpq_class(1, 239));
        benchmark::DoNotOptimize(x.approx(k));
    }
}
BENCHMARK(BM_PiMachin)->RangeMultiplier(4)->Range(64, 4096);

static void BM_Exp(benchmark::State &state)
{
    const Precision k = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exp(CReal::rational(7, 3)).approx(k));
    }
}
BENCHMARK(BM_Exp)->RangeMultiplier(4)->Range(64, 4096);

static void BM_Sin(benchmark::State &state)
{
    const Precision k = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sin(CReal::integer(100)).approx(k));
    }
}
BENCHMARK(BM_Sin)->RangeMultiplier(4)->Range(64, 4096);

static void BM_Ln(benchmark::State &state)
{
    const Precision k = state.range(0);
    const CReal x = CReal::rational(1000, 7);
    const auto cert = std::get<ApartnessCertificate>(find_apart(x, 1, 10));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ln(CReal::rational(1000, 7), cert).approx(k));
    }
}
BENCHMARK(BM_Ln)->RangeMultiplier(4)->Range(64, 4096);

static void BM_ProveExpPiGap(benchmark::State &state)
{
    const Query q = parse_query("exp(pi) - pi < 20");
    for (auto _ : state) {
        benchmark::DoNotOptimize(prove(q));
    }
}
BENCHMARK(BM_ProveExpPiGap);

static void BM_ProveExhausted(benchmark::State &state)
{
    const Query q = parse_query("sin(pi) > 0");
    ProveOptions opts;
    opts.max_k = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(prove(q, opts));
    }
}
BENCHMARK(BM_ProveExhausted)->Arg(80)->Arg(1024);

static void BM_IntervalEval(benchmark::State &state)
{
    const ExprPtr e = parse_expression("exp(pi) - pi + ln(2) * tan(0.5) / cos(1)");
    const Precision k = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_interval(*e, k));
    }
}
BENCHMARK(BM_IntervalEval)->RangeMultiplier(4)->Range(16, 1024);

static void BM_Pi01Decide(benchmark::State &state)
{
    const Pi01Pred p = Pi01Pred::parse("not (2 | n) or n < " + std::to_string(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pi01_decide(p));
    }
}
BENCHMARK(BM_Pi01Decide)->Arg(8)->Arg(24)->Arg(60);

BENCHMARK_MAIN();
