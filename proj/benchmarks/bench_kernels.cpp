#include <benchmark/benchmark.h>

#include "sigalg/random.hpp"
#include "sigalg/shuffle.hpp"
#include "sigalg/signature.hpp"

using namespace sigalg;

namespace {

void BM_MultiplyF64(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    Rng rng(1);
    const auto a = random_real_tensor(rng, d, n, 1.0);
    const auto b = random_real_tensor(rng, d, n, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(total_size(d, n)));
}
BENCHMARK(BM_MultiplyF64)->Args({2, 8})->Args({2, 12})->Args({3, 6})->Args({3, 8})->Args({4, 6});

void BM_MultiplyRational(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    Rng rng(2);
    const auto a = random_rational_tensor(rng, d, n, 1);
    const auto b = random_rational_tensor(rng, d, n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(BM_MultiplyRational)->Args({2, 6})->Args({3, 4});

void BM_ExpF64(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(3);
    auto x = random_real_tensor(rng, 3, n, 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(tensor_exp(x));
}
BENCHMARK(BM_ExpF64)->Arg(4)->Arg(6)->Arg(8);

void BM_SignatureF64(benchmark::State& state) {
    const auto segments = static_cast<std::size_t>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    Rng rng(4);
    const auto p = to_f64(random_rational_path(rng, 2, segments));
    for (auto _ : state) benchmark::DoNotOptimize(signature(p, n));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(segments));
}
BENCHMARK(BM_SignatureF64)->Args({10, 8})->Args({100, 8})->Args({10, 12});

void BM_SignatureRational(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(5);
    const auto p = random_rational_path(rng, 2, 5);
    for (auto _ : state) benchmark::DoNotOptimize(signature(p, n));
}
BENCHMARK(BM_SignatureRational)->Arg(6)->Arg(8)->Arg(10);

void BM_ShuffleProject(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    Rng rng(6);
    const auto g = signature(to_f64(random_rational_path(rng, 2, 4)), m + n);
    for (auto _ : state) benchmark::DoNotOptimize(shuffle_project(g, m, n));
}
BENCHMARK(BM_ShuffleProject)->Args({1, 3})->Args({3, 3})->Args({4, 4});

}  // namespace

BENCHMARK_MAIN();
