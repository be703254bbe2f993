// Self-consistency of the shipped calibrated dataset against its published
// anchors. Everything here reads from data/ only.
#include <cmath>

#include <doctest.h>

#include "gpulca/analysis.hpp"
#include "gpulca/json_io.hpp"
#include "test_util.hpp"

using namespace gpulca;
using gpulca::test::approx_rel;

namespace {

const std::string kData = GPULCA_DATA_DIR;
constexpr auto kClimate = ImpactCategory::ClimateChange;

struct Shipped {
    GpuProduct bom = load_bom(kData + "/a100_bom.json");
    FactorSet factors = load_factors(kData + "/factors_a100.json");
    UsageScenario bloom_scenario = load_scenario(kData + "/scenario_bloom.json");
    UsageScenario gpt4_scenario = load_scenario(kData + "/scenario_gpt4.json");
    FunctionalUnitConfig bloom_fu = load_fu(kData + "/fu_bloom.json");
    FunctionalUnitConfig gpt4_fu = load_fu(kData + "/fu_gpt4.json");
    PBReference pb = load_pb(kData + "/pb_budgets_2023.json");
};

ImpactVector fu_totals(const Shipped& d, const UsageScenario& s,
                       const FunctionalUnitConfig& fu) {
    const StageBreakdown card = gpu_lifecycle(d.bom, s, d.factors);
    return training_impacts(fu.gpu_hours.mid(),
                            impact_per_active_hour(card.total, active_gpu_hours(s)));
}

} // namespace

TEST_CASE("elemental adjustment deltas carry the published multipliers") {
    const AdjustmentDeltas deltas = load_deltas(kData + "/deltas_elemental.json");
    CHECK(deltas[kClimate] == 1.0177);
    CHECK(deltas[ImpactCategory::ResourceUseMineralsMetals] == 1.3282);
    CHECK(deltas[ImpactCategory::EutrophicationFreshwater] == 1.0002);

    double mean_pct = 0.0;
    double min_pct = 1e9, max_pct = -1e9;
    for (auto cat : all_categories()) {
        const double pct = (deltas[cat] - 1.0) * 100.0;
        mean_pct += pct / kCategoryCount;
        min_pct = std::min(min_pct, pct);
        max_pct = std::max(max_pct, pct);
    }
    CHECK(std::fabs(mean_pct - 3.93) <= 0.05);
    CHECK(min_pct == doctest::Approx(0.02));
    CHECK(max_pct == doctest::Approx(32.82));
}

TEST_CASE("adjusting the base dataset reproduces the shipped one") {
    const FactorSet base = load_factors(kData + "/factors_a100_base.json");
    const FactorSet shipped = load_factors(kData + "/factors_a100.json");
    const AdjustmentDeltas deltas = load_deltas(kData + "/deltas_elemental.json");

    const FactorSet adjusted = adjust_inventory(base, deltas);
    for (const auto& [ref, factor] : shipped.component_factors) {
        REQUIRE(adjusted.component_factors.count(ref) == 1);
        for (auto cat : all_categories())
            CHECK(approx_rel(adjusted.component_factors.at(ref)[cat], factor[cat], 1e-12));
    }
    // untouched by the adjustment
    CHECK(adjusted.transport_per_tkm == shipped.transport_per_tkm);
    CHECK(adjusted.eol_per_kg == shipped.eol_per_kg);
    for (const auto& [id, grid] : shipped.grid_mixes)
        CHECK(adjusted.grid_mixes.at(id) == grid);
}

TEST_CASE("shipped factor file is exactly the calibrate output") {
    const CalibrationTargets targets = load_targets(kData + "/targets_a100.json");
    const std::string serialized = serialize_factors(calibrate_from_targets(targets));
    CHECK(serialized == read_file(kData + "/factors_a100.json"));
}

TEST_CASE("reference-card breakdown matches the published stage pattern") {
    const Shipped d;
    const StageBreakdown card = gpu_lifecycle(d.bom, d.bloom_scenario, d.factors);
    const BreakdownTable stages = card.stage_shares();

    CHECK(card.electricity_kwh == doctest::Approx(10512.0));
    CHECK(*stages.share("use", ImpactCategory::IonisingRadiation) >= 96.0);
    CHECK(*stages.share("use", ImpactCategory::ParticulateMatter) >= 95.0);
    CHECK(*stages.share("use", ImpactCategory::EutrophicationTerrestrial) >= 90.0);
    CHECK(*stages.share("use", ImpactCategory::Acidification) >= 79.0);
    CHECK(*stages.share("cradle-to-gate", ImpactCategory::HumanToxicityNonCancer) >= 56.0);
    CHECK(*stages.share("cradle-to-gate", ImpactCategory::EcotoxicityFreshwater) >= 37.0);
    CHECK(*stages.share("distribution", ImpactCategory::EutrophicationMarine) >= 2.0);
    CHECK(*stages.share("distribution", ImpactCategory::EutrophicationTerrestrial) >= 1.0);
    CHECK(*stages.share("end-of-life", ImpactCategory::EcotoxicityFreshwater) >= 35.0);
    CHECK(*stages.share("end-of-life", ImpactCategory::LandUse) >= 18.0);

    // the use phase dominates 11 of 16 categories, manufacturing 5
    int use_dominated = 0, mfg_dominated = 0;
    for (auto cat : all_categories()) {
        double best = -1.0;
        std::string winner;
        for (const auto& label : StageBreakdown::stage_labels()) {
            if (*stages.share(label, cat) > best) {
                best = *stages.share(label, cat);
                winner = label;
            }
        }
        use_dominated += winner == "use";
        mfg_dominated += winner == "cradle-to-gate";
    }
    CHECK(use_dominated == 11);
    CHECK(mfg_dominated == 5);
}

TEST_CASE("component shares match the published cradle-to-gate pattern") {
    const Shipped d;
    const BreakdownTable comp =
        gpu_lifecycle(d.bom, d.bloom_scenario, d.factors).component_shares();

    CHECK(*comp.share("gpu-chip", ImpactCategory::ResourceUseFossils) ==
          doctest::Approx(80.0).epsilon(1e-6));
    CHECK(*comp.share("heatsink", ImpactCategory::HumanToxicityNonCancer) ==
          doctest::Approx(68.0).epsilon(1e-6));
    CHECK(*comp.share("heatsink", ImpactCategory::EutrophicationFreshwater) ==
          doctest::Approx(86.0).epsilon(1e-6));
    CHECK(*comp.share("heatsink", ImpactCategory::IonisingRadiation) ==
          doctest::Approx(90.7).epsilon(1e-6));
    CHECK(*comp.share("heatsink", ImpactCategory::LandUse) ==
          doctest::Approx(91.0).epsilon(1e-6));
    CHECK(*comp.share("pcb", ImpactCategory::ResourceUseMineralsMetals) ==
          doctest::Approx(14.4).epsilon(1e-6));

    // the chip is the dominant component in 10 of 16 categories
    int chip_dominated = 0;
    for (auto cat : all_categories()) {
        double best = -1.0;
        std::string winner;
        for (const auto& label : comp.labels()) {
            if (*comp.share(label, cat) > best) {
                best = *comp.share(label, cat);
                winner = label;
            }
        }
        chip_dominated += winner == "gpu-chip";
    }
    CHECK(chip_dominated == 10);

    // casing stays below 1% in most categories
    int casing_small = 0;
    for (auto cat : all_categories())
        casing_small += *comp.share("casing", cat) <= 1.0;
    CHECK(casing_small >= 12);
}

TEST_CASE("training-run stage shares match the published FU pattern") {
    const Shipped d;

    UsageScenario bloom = d.bloom_scenario;
    bloom.grid_id = d.bloom_fu.grid_id;
    const BreakdownTable bloom_stages =
        gpu_lifecycle(d.bom, bloom, d.factors).stage_shares();
    CHECK(*bloom_stages.share("use", ImpactCategory::ResourceUseFossils) ==
          doctest::Approx(98.5).epsilon(1e-4));
    CHECK(*bloom_stages.share("use", ImpactCategory::EutrophicationTerrestrial) ==
          doctest::Approx(90.1).epsilon(1e-4));
    CHECK(*bloom_stages.share("cradle-to-gate", ImpactCategory::ResourceUseMineralsMetals) ==
          doctest::Approx(85.1).epsilon(1e-4));
    CHECK(*bloom_stages.share("cradle-to-gate", ImpactCategory::HumanToxicityNonCancer) ==
          doctest::Approx(56.6).epsilon(1e-4));
    CHECK(*bloom_stages.share("cradle-to-gate", ImpactCategory::EcotoxicityFreshwater) ==
          doctest::Approx(37.5).epsilon(1e-4));

    UsageScenario gpt4 = d.gpt4_scenario;
    gpt4.grid_id = d.gpt4_fu.grid_id;
    const BreakdownTable gpt4_stages = gpu_lifecycle(d.bom, gpt4, d.factors).stage_shares();
    CHECK(std::fabs(*gpt4_stages.share("cradle-to-gate", ImpactCategory::HumanToxicityCancer) -
                    94.5) <= 1.0);
    CHECK(std::fabs(*gpt4_stages.share("use", ImpactCategory::ResourceUseFossils) - 96.2) <= 1.0);
    CHECK(std::fabs(*gpt4_stages.share("cradle-to-gate",
                                       ImpactCategory::EutrophicationFreshwater) - 81.4) <= 1.0);
    CHECK(std::fabs(*gpt4_stages.share("use", ImpactCategory::Acidification) - 90.3) <= 1.0);
    CHECK(std::fabs(*gpt4_stages.share("use", ImpactCategory::WaterUse) - 85.8) <= 1.0);

    // use dominates 10 of 16 for this grid, manufacturing 6
    int use_dominated = 0, mfg_dominated = 0;
    for (auto cat : all_categories()) {
        double best = -1.0;
        std::string winner;
        for (const auto& label : StageBreakdown::stage_labels()) {
            if (*gpt4_stages.share(label, cat) > best) {
                best = *gpt4_stages.share(label, cat);
                winner = label;
            }
        }
        use_dominated += winner == "use";
        mfg_dominated += winner == "cradle-to-gate";
    }
    CHECK(use_dominated == 10);
    CHECK(mfg_dominated == 6);
}

TEST_CASE("planetary-boundary anchors hold for both shipped runs") {
    const Shipped d;

    UsageScenario bloom = d.bloom_scenario;
    bloom.grid_id = d.bloom_fu.grid_id;
    const PbNormalization bloom_pb =
        pb_normalize(fu_totals(d, bloom, d.bloom_fu), d.pb);
    CHECK(std::fabs(*bloom_pb.person_equivalents[index_of(kClimate)] - 53.0) <= 0.5);
    // fossil resources land close to 200 person-budgets, particulate matter near 100
    const double bloom_fossils =
        *bloom_pb.person_equivalents[index_of(ImpactCategory::ResourceUseFossils)];
    CHECK(bloom_fossils >= 150.0);
    CHECK(bloom_fossils <= 220.0);
    CHECK(std::fabs(*bloom_pb.person_equivalents[index_of(ImpactCategory::ParticulateMatter)] -
                    100.0) <= 5.0);

    // 11 of 15 categories exceed the annual budget of 100 people
    int above_100 = 0;
    for (auto cat : all_categories())
        if (cat != ImpactCategory::LandUse &&
            *bloom_pb.person_equivalents[index_of(cat)] >= 99.5)
            ++above_100;
    CHECK(above_100 == 11);

    UsageScenario gpt4 = d.gpt4_scenario;
    gpt4.grid_id = d.gpt4_fu.grid_id;
    const PbNormalization gpt4_pb = pb_normalize(fu_totals(d, gpt4, d.gpt4_fu), d.pb);
    CHECK(approx_rel(*gpt4_pb.person_equivalents[index_of(ImpactCategory::EcotoxicityFreshwater)],
                     1421.0, 0.05));
    CHECK(approx_rel(*gpt4_pb.person_equivalents[index_of(ImpactCategory::HumanToxicityCancer)],
                     708.0, 0.05));
    CHECK(approx_rel(
        *gpt4_pb.person_equivalents[index_of(ImpactCategory::ResourceUseMineralsMetals)],
        678.0, 0.05));
    // every category exceeds one person-budget
    for (auto cat : all_categories())
        if (cat != ImpactCategory::LandUse)
            CHECK(*gpt4_pb.person_equivalents[index_of(cat)] > 1.0);
}

TEST_CASE("shipped FU configurations") {
    const Shipped d;
    CHECK(d.bloom_fu.gpu_hours.mid() == doctest::Approx(1.0806e6));
    CHECK(!d.bloom_fu.gpu_hours.is_range());
    CHECK(d.gpt4_fu.gpu_hours.min == 54e6);
    CHECK(d.gpt4_fu.gpu_hours.max == 60e6);
    CHECK(d.gpt4_fu.gpu_hours.mid() == 57e6);
    CHECK(cards_required(d.bloom_fu, d.bloom_scenario) == doctest::Approx(41.1).epsilon(1e-3));
    CHECK(cards_required(d.gpt4_fu, d.gpt4_scenario) == doctest::Approx(2169.0).epsilon(1e-3));
}
