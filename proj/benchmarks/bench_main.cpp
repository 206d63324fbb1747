#include <benchmark/benchmark.h>

#include <cmath>

#include "revolve/ifs.hpp"
#include "revolve/verify.hpp"

namespace {

using namespace revolve;

FamilyParams levy_params() { return {{0.5, -0.5}, std::nullopt, Angle::from_fraction(1, 4, 1)}; }
FamilyParams terdragon_params() {
    const Complex a{0.5, -std::sqrt(3.0) / 6.0};
    return {a, std::conj(a), Angle::from_fraction(1, 3, 1)};
}

void BM_EnumerateGrc(benchmark::State& state) {
    const Angle quarter = Angle::from_fraction(1, 4, 1);
    const auto length = static_cast<std::size_t>(state.range(0));
    std::uint64_t words = 0;
    for (auto _ : state) {
        words = count_words(Condition::grc, quarter, length, FirstDigitPolicy::must_be_one);
        benchmark::DoNotOptimize(words);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(words));
}
BENCHMARK(BM_EnumerateGrc)->DenseRange(12, 20, 4);

void BM_EnumerateTrc(benchmark::State& state) {
    const Angle third = Angle::from_fraction(1, 3, 1);
    const auto length = static_cast<std::size_t>(state.range(0));
    std::uint64_t words = 0;
    for (auto _ : state) {
        words = count_words(Condition::trc, third, length, FirstDigitPolicy::must_be_one);
        benchmark::DoNotOptimize(words);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(words));
}
BENCHMARK(BM_EnumerateTrc)->DenseRange(8, 14, 2);

void BM_MakeCloudT1(benchmark::State& state) {
    const FamilyParams p = terdragon_params();
    const auto depth = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        const PointCloud c = make_cloud(Family::t1, p, depth);
        benchmark::DoNotOptimize(c.points.data());
    }
}
BENCHMARK(BM_MakeCloudT1)->DenseRange(6, 12, 2);

void BM_OrbitDepth(benchmark::State& state) {
    const Ifs system = preset(PresetName::terdragon);
    const auto depth = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        const PointCloud c = orbit_depth(system, {0.0, 0.0}, depth);
        benchmark::DoNotOptimize(c.points.data());
    }
}
BENCHMARK(BM_OrbitDepth)->DenseRange(6, 12, 2);

void BM_Hausdorff(benchmark::State& state) {
    const FamilyParams p = levy_params();
    const auto depth = static_cast<std::size_t>(state.range(0));
    const PointCloud a = make_cloud(Family::x1, p, depth);
    const PointCloud b = make_cloud(Family::x1, p, depth - 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hausdorff(a, b));
    }
    state.SetComplexityN(static_cast<std::int64_t>(a.count()));
}
BENCHMARK(BM_Hausdorff)->DenseRange(8, 12, 2)->Complexity();

void BM_ChaosGame(benchmark::State& state) {
    const Ifs system = preset(PresetName::levy);
    const auto iterations = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        const PointCloud c = chaos_game(system, iterations, 42, 100);
        benchmark::DoNotOptimize(c.points.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(iterations));
}
BENCHMARK(BM_ChaosGame)->Range(1 << 12, 1 << 16);

}  // namespace

BENCHMARK_MAIN();
