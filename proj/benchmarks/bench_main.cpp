#include <mzv/catalog.hpp>
#include <mzv/maps.hpp>
#include <mzv/mzv_eval.hpp>
#include <mzv/products.hpp>
#include <mzv/regularization.hpp>
#include <mzv/relations.hpp>

#include <benchmark/benchmark.h>

using namespace mzv;

namespace {

Word sample_h1(std::size_t weight) {
    Word w;
    for (std::size_t i = 0; i + 1 < weight; ++i) w = w.append(i % 3 == 0 ? Letter::X : Letter::Y);
    return w.append(Letter::Y);
}

void BM_Shuffle(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    WordSum u = sample_h1(k), v = sample_h1(k);
    for (auto _ : state) {
        clear_product_cache();
        benchmark::DoNotOptimize(shuffle(u, v));
    }
}
BENCHMARK(BM_Shuffle)->DenseRange(3, 7, 2);

void BM_Stuffle(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    WordSum u = sample_h1(k), v = sample_h1(k);
    for (auto _ : state) {
        clear_product_cache();
        benchmark::DoNotOptimize(stuffle(u, v));
    }
}
BENCHMARK(BM_Stuffle)->DenseRange(3, 7, 2);

void BM_SMap(benchmark::State& state) {
    WordSum u = Word::power(Letter::X, static_cast<std::size_t>(state.range(0))).append(Letter::Y);
    u = shuffle(u, WordSum(Word::from_string("xyy")));
    for (auto _ : state) benchmark::DoNotOptimize(S_map(u));
}
BENCHMARK(BM_SMap)->DenseRange(2, 8, 3);

void BM_RegDecomposePeel(benchmark::State& state) {
    WordSum w = Word::power(Letter::Y, static_cast<std::size_t>(state.range(0))) + Word::from_string("xy");
    for (auto _ : state) benchmark::DoNotOptimize(reg_decompose(w, Product::Shuffle));
}
BENCHMARK(BM_RegDecomposePeel)->DenseRange(2, 6, 2);

void BM_RegDecomposeElimination(benchmark::State& state) {
    WordSum w = Word::power(Letter::Y, static_cast<std::size_t>(state.range(0))) + Word::from_string("xy");
    for (auto _ : state) benchmark::DoNotOptimize(reg_decompose_by_elimination(w, Product::Shuffle));
}
BENCHMARK(BM_RegDecomposeElimination)->DenseRange(2, 6, 2);

void BM_BuildBasis(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        clear_product_cache();
        benchmark::DoNotOptimize(build_basis(k, {Family::RDS_IV}).rank());
    }
}
BENCHMARK(BM_BuildBasis)->DenseRange(5, 9, 1)->Unit(benchmark::kMillisecond);

void BM_Zeta(benchmark::State& state) {
    const auto digits = static_cast<unsigned>(state.range(0));
    const Word w = index_to_word({3, 1, 2, 2});
    for (auto _ : state) {
        clear_mzv_cache();
        benchmark::DoNotOptimize(zeta_word(w, digits, MzvMethod::SplitHalf));
    }
}
BENCHMARK(BM_Zeta)->Arg(40)->Arg(100)->Arg(300)->Unit(benchmark::kMicrosecond);

void BM_ZetaSplitThird(benchmark::State& state) {
    const auto digits = static_cast<unsigned>(state.range(0));
    const Word w = index_to_word({3, 1, 2, 2});
    for (auto _ : state) {
        clear_mzv_cache();
        benchmark::DoNotOptimize(zeta_word(w, digits, MzvMethod::SplitThird));
    }
}
BENCHMARK(BM_ZetaSplitThird)->Arg(40)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_CatalogGuoXie(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        clear_product_cache();
        for (int n = 2; n < k; ++n) benchmark::DoNotOptimize(run_tasks(guo_xie_identity(k, n, GuoXieVariant::SShuffle)));
    }
}
BENCHMARK(BM_CatalogGuoXie)->DenseRange(5, 8, 1)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
