#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "laurent/engine.hpp"
#include "laurent/memory_model.hpp"
#include "laurent/plan.hpp"
#include "laurent/reference.hpp"

namespace {

using namespace laurent;

Signal random_signal(std::size_t n) {
    std::mt19937_64 rng(n);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> samples(n);
    for (auto& s : samples) s = dist(rng);
    return Signal(std::move(samples));
}

void BM_BuildPlan(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_plan(n));
}
BENCHMARK(BM_BuildPlan)->DenseRange(8, 32, 8);

void BM_CompileEngine(benchmark::State& state) {
    const auto plan = build_plan(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(TransformEngine(plan));
}
BENCHMARK(BM_CompileEngine)->DenseRange(8, 32, 8);

void BM_ExecuteExact(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const TransformEngine engine(build_plan(n));
    const auto v = random_signal(n);
    for (auto _ : state) benchmark::DoNotOptimize(engine.execute(v, TransformSelect::DFT, ArithmeticConfig::exact()));
}
BENCHMARK(BM_ExecuteExact)->DenseRange(8, 32, 8);

void BM_ExecuteFixed(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const TransformEngine engine(build_plan(n));
    const auto v = random_signal(n);
    const auto config = ArithmeticConfig::fixed();
    for (auto _ : state) benchmark::DoNotOptimize(engine.execute(v, TransformSelect::DFT, config));
}
BENCHMARK(BM_ExecuteFixed)->DenseRange(8, 32, 8);

void BM_ExecuteRawBound(benchmark::State& state) {
    const TransformEngine engine(build_plan(16));
    const auto bound = engine.bind(ArithmeticConfig::fixed());
    std::vector<std::int64_t> raws(16);
    for (std::size_t k = 0; k < raws.size(); ++k) raws[k] = static_cast<std::int64_t>(k % 8) * 128;
    for (auto _ : state) benchmark::DoNotOptimize(engine.execute_raw(raws, TransformSelect::DFT, bound));
}
BENCHMARK(BM_ExecuteRawBound);

void BM_DeviceModel(benchmark::State& state) {
    const TransformEngine engine(build_plan(kDeviceLength));
    MemoryImage image;
    for (std::size_t k = 0; k < kDeviceLength; ++k) image.inputWords[k] = static_cast<std::uint16_t>((k % 8) * 128);
    for (auto _ : state) benchmark::DoNotOptimize(run_device(image, engine));
}
BENCHMARK(BM_DeviceModel);

void BM_DirectDft(benchmark::State& state) {
    const auto v = random_signal(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dft_direct(v));
}
BENCHMARK(BM_DirectDft)->DenseRange(8, 32, 8);

}  // namespace

BENCHMARK_MAIN();
