#include <random>

#include <doctest.h>

#include "gpulca/error.hpp"
#include "gpulca/json_io.hpp"
#include "gpulca/lifecycle.hpp"
#include "test_util.hpp"

using namespace gpulca;
using gpulca::test::approx_rel;
using gpulca::test::test_product;
using gpulca::test::test_scenario;

TEST_CASE("lifetime electricity") {
    SUBCASE("full utilization at TDP over three years") {
        CHECK(lifetime_electricity_kwh(test_scenario(3.0, 1.0, 400.0, 85.0)) ==
              doctest::Approx(10512.0).epsilon(1e-12));
    }
    SUBCASE("pure idle year") {
        CHECK(lifetime_electricity_kwh(test_scenario(1.0, 0.0, 400.0, 85.0)) ==
              doctest::Approx(744.6).epsilon(1e-12));
    }
    SUBCASE("mixed utilization") {
        CHECK(lifetime_electricity_kwh(test_scenario(6.0, 0.85, 400.0, 85.0)) ==
              doctest::Approx(18540.54).epsilon(1e-9));
    }
    SUBCASE("idle term vanishes exactly at full utilization") {
        for (double idle : {0.0, 85.0, 250.0}) {
            const UsageScenario s = test_scenario(3.0, 1.0, 400.0, idle);
            CHECK(lifetime_electricity_kwh(s) == 400.0 * s.lifespan_hours / 1000.0);
        }
    }
}

TEST_CASE("lifetime electricity is affine in utilization, increasing in lifespan and power") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u_dist(0.0, 1.0);
    for (int iter = 0; iter < 100; ++iter) {
        const double u1 = u_dist(rng), u2 = u_dist(rng), lambda = u_dist(rng);
        const double mixed_u = lambda * u1 + (1.0 - lambda) * u2;
        const double e1 = lifetime_electricity_kwh(test_scenario(3.0, u1));
        const double e2 = lifetime_electricity_kwh(test_scenario(3.0, u2));
        const double mixed = lifetime_electricity_kwh(test_scenario(3.0, mixed_u));
        CHECK(approx_rel(mixed, lambda * e1 + (1.0 - lambda) * e2, 1e-12));

        CHECK(lifetime_electricity_kwh(test_scenario(4.0, u1)) > e1);
        CHECK(lifetime_electricity_kwh(test_scenario(3.0, u1, 500.0)) >= e1);
    }
}

TEST_CASE("scenario validation") {
    CHECK_THROWS_AS(lifetime_electricity_kwh(test_scenario(0.0, 1.0)), Error);
    CHECK_THROWS_AS(lifetime_electricity_kwh(test_scenario(3.0, 1.5)), Error);
    CHECK_THROWS_AS(lifetime_electricity_kwh(test_scenario(3.0, 1.0, 50.0, 85.0)), Error);
}

TEST_CASE("use phase impacts") {
    const ImpactVector grid = ImpactVector::single(ImpactCategory::ClimateChange, 0.090);
    SUBCASE("BLOOM-like reference card") {
        const ImpactVector use = use_phase_impacts(10512.0, grid);
        CHECK(use[ImpactCategory::ClimateChange] == doctest::Approx(946.08).epsilon(1e-12));
    }
    SUBCASE("zero consumption gives the zero vector") {
        CHECK(use_phase_impacts(0.0, grid) == ImpactVector::zero());
    }
    SUBCASE("published low-intensity estimate") {
        const ImpactVector low = ImpactVector::single(ImpactCategory::ClimateChange, 0.057);
        const ImpactVector use = use_phase_impacts(433150.0, low);
        CHECK(use[ImpactCategory::ClimateChange] == doctest::Approx(24690.0).epsilon(5e-4));
    }
}

TEST_CASE("cradle_to_gate sums the component factors") {
    std::mt19937 rng(21);
    const FactorSet f = gpulca::test::random_factor_set(rng);
    const GpuProduct p = test_product();
    const CradleToGate c2g = cradle_to_gate(p, f);
    REQUIRE(c2g.parts.size() == 3);
    const ImpactVector expected = vec_combine({f.component_factor("gpu-chip"),
                                               f.component_factor("heatsink"),
                                               f.component_factor("pcb")});
    for (auto cat : all_categories())
        CHECK(approx_rel(c2g.total[cat], expected[cat], 1e-12));

    SUBCASE("empty BOM is an error") {
        GpuProduct empty = p;
        empty.components.clear();
        CHECK_THROWS_AS(cradle_to_gate(empty, f), Error);
    }
    SUBCASE("dangling factor_ref is an error") {
        GpuProduct dangling = p;
        dangling.components[0].factor_ref = "nvlink";
        CHECK_THROWS_WITH_AS(cradle_to_gate(dangling, f), doctest::Contains("nvlink"), Error);
    }
}

TEST_CASE("distribution impacts") {
    std::mt19937 rng(22);
    FactorSet f = gpulca::test::random_factor_set(rng);
    const GpuProduct p = test_product();
    const UsageScenario s = test_scenario();

    const double km = great_circle_km(s.route);
    const ImpactVector d = distribution_impacts(p, s, f);
    for (auto cat : all_categories())
        CHECK(approx_rel(d[cat], f.transport_per_tkm[cat] * 0.0018 * km, 1e-12));

    SUBCASE("zero card mass gives the zero vector") {
        GpuProduct weightless = p;
        weightless.card_mass_kg = 0.0;
        CHECK(distribution_impacts(weightless, s, f) == ImpactVector::zero());
    }
    SUBCASE("identical endpoints give the zero vector") {
        UsageScenario local = s;
        local.route.to = local.route.from;
        CHECK(distribution_impacts(p, local, f) == ImpactVector::zero());
    }
    SUBCASE("doubling the mass doubles the impacts") {
        GpuProduct heavy = p;
        heavy.card_mass_kg *= 2.0;
        const ImpactVector d2 = distribution_impacts(heavy, s, f);
        for (auto cat : all_categories())
            CHECK(approx_rel(d2[cat], 2.0 * d[cat], 1e-12));
    }
}

TEST_CASE("eol impacts are cut-off treatment burdens") {
    std::mt19937 rng(23);
    const FactorSet f = gpulca::test::random_factor_set(rng);
    const GpuProduct p = test_product();

    const ImpactVector e = eol_impacts(p, f);
    for (auto cat : all_categories()) {
        CHECK(approx_rel(e[cat], f.eol_per_kg[cat] * 1.5, 1e-12));
        CHECK(e[cat] >= 0.0); // no substitution credits
    }
    GpuProduct weightless = p;
    weightless.card_mass_kg = 0.0;
    // card_mass 0 violates the BOM invariant elsewhere, but the EoL formula
    // itself degrades to zero
    CHECK(eol_impacts(weightless, f) == ImpactVector::zero());
}

TEST_CASE("gpu_lifecycle assembles four stages and their sum") {
    std::mt19937 rng(24);
    const FactorSet f = gpulca::test::random_factor_set(rng);
    const GpuProduct p = test_product();
    const UsageScenario s = test_scenario();

    const StageBreakdown b = gpu_lifecycle(p, s, f);
    const ImpactVector expected =
        vec_combine({b.cradle_to_gate.total, b.distribution, b.use, b.eol});
    for (auto cat : all_categories())
        CHECK(approx_rel(b.total[cat], expected[cat], 1e-9));

    SUBCASE("doubling the grid doubles only the use stage") {
        FactorSet doubled = f;
        doubled.grid_mixes.at("test-grid") = vec_scale(f.grid_mixes.at("test-grid"), 2.0);
        const StageBreakdown b2 = gpu_lifecycle(p, s, doubled);
        CHECK(b2.cradle_to_gate.total == b.cradle_to_gate.total);
        CHECK(b2.distribution == b.distribution);
        CHECK(b2.eol == b.eol);
        for (auto cat : all_categories())
            CHECK(approx_rel(b2.use[cat], 2.0 * b.use[cat], 1e-12));
    }
}

TEST_CASE("shipped dataset reproduces the reference card stage pattern") {
    const GpuProduct p = load_bom(std::string(GPULCA_DATA_DIR) + "/a100_bom.json");
    const FactorSet f = load_factors(std::string(GPULCA_DATA_DIR) + "/factors_a100.json");
    const UsageScenario s =
        load_scenario(std::string(GPULCA_DATA_DIR) + "/scenario_bloom.json");

    const StageBreakdown b = gpu_lifecycle(p, s, f);
    const auto kClimate = ImpactCategory::ClimateChange;
    CHECK(b.cradle_to_gate.total[kClimate] == doctest::Approx(127.6).epsilon(1e-6));
    CHECK(b.total[kClimate] == doctest::Approx(1092.7).epsilon(1e-3));

    const BreakdownTable shares = b.stage_shares();
    CHECK(std::fabs(*shares.share("use", kClimate) - 87.0) <= 1.0);
    CHECK(*shares.share("use", ImpactCategory::ResourceUseFossils) >= 98.0);
    CHECK(*shares.share("cradle-to-gate", ImpactCategory::HumanToxicityCancer) >= 99.0);

    const BreakdownTable components = b.component_shares();
    CHECK(*components.share("heatsink", ImpactCategory::HumanToxicityCancer) ==
          doctest::Approx(91.0).epsilon(1e-3));
}
