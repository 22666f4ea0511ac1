#include <benchmark/benchmark.h>

#include "relkin/kinematics_3d.hpp"
#include "relkin/oracle.hpp"
#include "relkin/sweep.hpp"

namespace {

using namespace relkin;
namespace oc = relkin::oracle;

constexpr double kPi = 3.14159265358979323846;

void BM_boost_event(benchmark::State& state) {
    const Event1D e(4, 5);
    const Beta b(0.6);
    for (auto _ : state) benchmark::DoNotOptimize(boost_event(e, b));
}
BENCHMARK(BM_boost_event);

void BM_generalized_boost_1d(benchmark::State& state) {
    const Event1D e(4, 5);
    const Beta b(0.6);
    const auto rot = ReciprocityRotation::from_angle(kPi / 3);
    for (auto _ : state) benchmark::DoNotOptimize(generalized_boost(e, b, rot));
}
BENCHMARK(BM_generalized_boost_1d);

void BM_generalized_boost_3d(benchmark::State& state) {
    const Vec3 X{1.2, 0.4, 0.3};
    const Vec3 V{0.3, 0.2, 0.1};
    const ReciprocityAxis axis({1, 2, 2}, ReciprocityRotation::from_angle(kPi / 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(generalized_boost_3d(X, 2.0, V, axis));
}
BENCHMARK(BM_generalized_boost_3d);

void BM_invariance_residual_3d(benchmark::State& state) {
    const Vec3 X{1.2, 0.4, 0.3};
    const Vec3 V{0.3, 0.2, 0.1};
    const ReciprocityAxis axis({1, 2, 2}, ReciprocityRotation::from_angle(kPi / 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(invariance_residual_3d(X, 2.0, V, axis));
}
BENCHMARK(BM_invariance_residual_3d);

void BM_oracle_generalized_boost(benchmark::State& state) {
    const oc::REvent1D e{4, 5};
    const oc::BigRational beta(3, 5);
    const auto rot = oc::RotationParam::from_r(oc::BigRational(1, 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(oc::generalized_boost(e, beta, rot));
}
BENCHMARK(BM_oracle_generalized_boost);

void BM_oracle_invariance_residual_3d(benchmark::State& state) {
    const oc::RVec3 X{oc::BigRational(9, 5), oc::BigRational(12, 5), 0};
    const oc::RVec3 V{oc::BigRational(9, 25), oc::BigRational(12, 25), 0};
    const oc::ExactAxis axis({1, 0, 0}, oc::RotationParam::from_r(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(oc::invariance_residual_3d(X, 5, V, axis));
}
BENCHMARK(BM_oracle_invariance_residual_3d);

void BM_verify_suite_small(benchmark::State& state) {
    sweep::SweepConfig config;
    config.phi_count = 8;
    config.sample_count = 4;
    for (auto _ : state) benchmark::DoNotOptimize(sweep::run_verify(config));
}
BENCHMARK(BM_verify_suite_small);

}  // namespace

BENCHMARK_MAIN();
