#include <benchmark/benchmark.h>

#include "gpulca/analysis.hpp"
#include "gpulca/json_io.hpp"

using namespace gpulca;

namespace {

const std::string kData = GPULCA_DATA_DIR;

struct Fixture {
    GpuProduct bom = load_bom(kData + "/a100_bom.json");
    FactorSet factors = load_factors(kData + "/factors_a100.json");
    UsageScenario scenario = load_scenario(kData + "/scenario_bloom.json");
    FunctionalUnitConfig fu = load_fu(kData + "/fu_bloom.json");
};

const Fixture& fixture() {
    static Fixture f;
    return f;
}

} // namespace

static void BM_VecCombine(benchmark::State& state) {
    std::vector<ImpactVector> parts;
    for (const auto& [ref, factor] : fixture().factors.component_factors)
        parts.push_back(factor);
    for (auto _ : state) {
        benchmark::DoNotOptimize(vec_combine(parts));
    }
}
BENCHMARK(BM_VecCombine);

static void BM_GpuLifecycle(benchmark::State& state) {
    const Fixture& f = fixture();
    for (auto _ : state) {
        benchmark::DoNotOptimize(gpu_lifecycle(f.bom, f.scenario, f.factors));
    }
}
BENCHMARK(BM_GpuLifecycle);

static void BM_TrainingPipeline(benchmark::State& state) {
    const Fixture& f = fixture();
    for (auto _ : state) {
        const StageBreakdown card = gpu_lifecycle(f.bom, f.scenario, f.factors);
        const ImpactVector per_hour =
            impact_per_active_hour(card.total, active_gpu_hours(f.scenario));
        benchmark::DoNotOptimize(training_impacts(f.fu.gpu_hours.mid(), per_hour));
    }
}
BENCHMARK(BM_TrainingPipeline);

static void BM_SensitivitySweep(benchmark::State& state) {
    const Fixture& f = fixture();
    SweepSpec spec;
    spec.parameter = SweepParameter::LifespanYears;
    spec.values = {1.0, 2.0, 4.0};
    spec.reference = f.scenario;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sensitivity_sweep(spec, f.fu, f.bom, f.factors));
    }
}
BENCHMARK(BM_SensitivitySweep);

static void BM_Calibrate(benchmark::State& state) {
    const CalibrationTargets targets = load_targets(kData + "/targets_a100.json");
    for (auto _ : state) {
        benchmark::DoNotOptimize(calibrate_from_targets(targets));
    }
}
BENCHMARK(BM_Calibrate);

static void BM_FactorsRoundTrip(benchmark::State& state) {
    const Fixture& f = fixture();
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_factors(serialize_factors(f.factors), "bench"));
    }
}
BENCHMARK(BM_FactorsRoundTrip);

BENCHMARK_MAIN();
