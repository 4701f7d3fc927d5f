#include <benchmark/benchmark.h>

#include <random>

#include "zigzag/constructions.hpp"
#include "zigzag/decode.hpp"
#include "zigzag/rebuild.hpp"

using namespace zigzag;

namespace {

std::vector<std::vector<int>> random_info(const CodeSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> info(spec.p, std::vector<int>(spec.k()));
    for (auto& row : info)
        for (int& x : row) x = static_cast<int>(rng() % spec.field.q());
    return info;
}

void bm_encode(benchmark::State& state) {
    const CodeSpec spec = build_optimal_r2(static_cast<int>(state.range(0)));
    const auto info = random_info(spec, 1);
    for (auto _ : state) benchmark::DoNotOptimize(encode(spec, info));
    state.SetItemsProcessed(state.iterations() * spec.p * spec.k());
}

void bm_plan_single(benchmark::State& state) {
    const CodeSpec spec = build_optimal_r2(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(plan_single(spec, 1));
}

void bm_rebuild_single(benchmark::State& state) {
    const CodeSpec spec = build_optimal_r2(static_cast<int>(state.range(0)));
    const RebuildPlan plan = plan_single(spec, 1);
    const CodeArray original = make_array(spec, random_info(spec, 2));
    for (auto _ : state) {
        CodeArray arr = original;
        arr.erased.insert(1);
        for (auto& row : arr.info) row[1] = 0;
        execute_rebuild(spec, plan, arr);
        benchmark::DoNotOptimize(arr);
    }
}

void bm_decode_two_erasures(benchmark::State& state) {
    const CodeSpec spec = build_optimal_r2(static_cast<int>(state.range(0)));
    const CodeArray original = make_array(spec, random_info(spec, 3));
    for (auto _ : state) {
        CodeArray arr = original;
        arr.erased = {0, 1};
        for (auto& row : arr.info) row[0] = row[1] = 0;
        decode_erasures(spec, arr);
        benchmark::DoNotOptimize(arr);
    }
}

void bm_error_scan(benchmark::State& state) {
    const CodeSpec spec = build_optimal_r2(static_cast<int>(state.range(0)));
    const Field& f = spec.field;
    const CodeArray original = make_array(spec, random_info(spec, 4));
    for (auto _ : state) {
        CodeArray arr = original;
        arr.info[0][1] = f.add(arr.info[0][1], 1);
        benchmark::DoNotOptimize(decode_error(spec, arr));
    }
}

BENCHMARK(bm_encode)->DenseRange(2, 8);
BENCHMARK(bm_plan_single)->DenseRange(2, 8);
BENCHMARK(bm_rebuild_single)->DenseRange(2, 8);
BENCHMARK(bm_decode_two_erasures)->DenseRange(2, 6);
BENCHMARK(bm_error_scan)->DenseRange(2, 8);

} // namespace

BENCHMARK_MAIN();
