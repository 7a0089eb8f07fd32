#include <benchmark/benchmark.h>

#include "rpq/combinatorics.hpp"
#include "rpq/distributions.hpp"
#include "rpq/special_functions.hpp"

namespace {

const rpq::DeformationSpec& generalized() {
    static const auto d = rpq::DeformationSpec::generalized_quesne(1.2, 0.7);
    return d;
}

void BM_Number(benchmark::State& state) {
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rpq::number(generalized(), x));
        x = x > 50.0 ? 0.0 : x + 0.37;
    }
}
BENCHMARK(BM_Number);

void BM_BinomialCoefficient(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rpq::binomial_coefficient(generalized(), n, n / 2));
}
BENCHMARK(BM_BinomialCoefficient)->Arg(8)->Arg(32)->Arg(128);

// q = 0.9 keeps the order-20 system inside the conditioning guard.
void BM_StirlingTable(benchmark::State& state) {
    const auto d = rpq::DeformationSpec::arik_coon(0.9);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rpq::stirling_table(d, rpq::StirlingKind::First, 0, n));
}
BENCHMARK(BM_StirlingTable)->Arg(6)->Arg(12)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_StirlingExpansion(benchmark::State& state) {
    const auto d = rpq::DeformationSpec::arik_coon(0.5);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rpq::stirling_first_by_expansion(d, n));
}
BENCHMARK(BM_StirlingExpansion)->Arg(20)->Arg(80);

void BM_BinomialPmf(benchmark::State& state) {
    const auto method = state.range(1) == 0 ? rpq::Method::Direct : rpq::Method::Recursive;
    const rpq::BinomialParams params{static_cast<int>(state.range(0)), 0.3};
    for (auto _ : state) benchmark::DoNotOptimize(rpq::binomial_pmf(generalized(), params, method));
}
BENCHMARK(BM_BinomialPmf)->Args({16, 0})->Args({16, 1})->Args({128, 0})->Args({128, 1});

void BM_ExponentialSeries(benchmark::State& state) {
    const auto d = rpq::DeformationSpec::arik_coon(0.9);
    for (auto _ : state) benchmark::DoNotOptimize(rpq::exp_big_E(d, -0.7) * rpq::exp_small_e(d, 0.7));
}
BENCHMARK(BM_ExponentialSeries);

void BM_InversePolyaPmf(benchmark::State& state) {
    const auto d = rpq::DeformationSpec::arik_coon(0.9);
    const rpq::InversePolyaParams params{2, -2.5, -1.7, 1, 1e-14, 100000};
    for (auto _ : state) benchmark::DoNotOptimize(rpq::inverse_polya_pmf(d, params, rpq::Method::Direct));
}
BENCHMARK(BM_InversePolyaPmf)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
