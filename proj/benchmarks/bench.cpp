#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dnacodes/constructions.hpp"
#include "dnacodes/search.hpp"
#include "dnacodes/sequence.hpp"
#include "dnacodes/similarity.hpp"

using namespace dnacodes;

namespace {

QarySequence random_word(int q, int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, q - 1);
    std::vector<Letter> symbols(static_cast<std::size_t>(n));
    for (auto& a : symbols) a = static_cast<Letter>(pick(rng));
    return {q, symbols};
}

void similarity_kernel(benchmark::State& state, SimilarityKind kind) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937 rng(7);
    const QarySequence x = random_word(4, n, rng);
    const QarySequence y = random_word(4, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(similarity(kind, x, y));
}

void bm_additive(benchmark::State& state) {
    similarity_kernel(state, SimilarityKind::additive);
}
void bm_deletion(benchmark::State& state) {
    similarity_kernel(state, SimilarityKind::deletion);
}
void bm_block(benchmark::State& state) {
    similarity_kernel(state, SimilarityKind::block);
}

void bm_distribution(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_distribution(q, n, SimilarityKind::block));
}

void bm_orbit_construction(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(construct_orbit_code(q, n));
}

void bm_best_tenengolts(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(best_tenengolts_class(4, 6));
}

void bm_max_code(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            max_code(4, 4, 1, SimilarityKind::deletion, SearchMode::dna));
}

}  // namespace

BENCHMARK(bm_additive)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(bm_deletion)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(bm_block)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(bm_distribution)->Args({2, 6})->Args({4, 4});
BENCHMARK(bm_orbit_construction)->Args({4, 4})->Args({2, 12});
BENCHMARK(bm_best_tenengolts);
BENCHMARK(bm_max_code);

BENCHMARK_MAIN();
