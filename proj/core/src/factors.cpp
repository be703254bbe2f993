#include "gpulca/factors.hpp"

#include <cmath>
#include <string>

#include "gpulca/error.hpp"
#include "gpulca/lifecycle.hpp"

namespace gpulca {

const ImpactVector& FactorSet::grid(const std::string& grid_id) const {
    auto it = grid_mixes.find(grid_id);
    if (it == grid_mixes.end())
        throw Error("factors: unknown grid id '" + grid_id + "'");
    return it->second;
}

const ImpactVector& FactorSet::component_factor(const std::string& factor_ref) const {
    auto it = component_factors.find(factor_ref);
    if (it == component_factors.end())
        throw Error("factors: dangling factor_ref '" + factor_ref + "'");
    return it->second;
}

void PBReference::validate() const {
    if (!(population > 0.0))
        throw Error("pb: population must be > 0");
    for (auto cat : all_categories()) {
        const auto& budget = budgets[index_of(cat)];
        if (cat == ImpactCategory::LandUse) {
            if (budget.has_value())
                throw Error("pb: land-use has no PB normalization factor and must be absent");
            continue;
        }
        if (!budget.has_value())
            throw Error("pb: missing budget for " + std::string(category_id(cat)));
        if (!(*budget > 0.0) || !std::isfinite(*budget))
            throw Error("pb: budget for " + std::string(category_id(cat)) +
                        " must be a positive finite number");
    }
}

namespace {

void check_share_sum(const char* what, ImpactCategory cat, double sum) {
    if (sum < 99.5 || sum > 100.5)
        throw Error("targets: " + std::string(what) + " shares for " +
                    std::string(category_id(cat)) + " sum to " + std::to_string(sum) +
                    ", outside [99.5, 100.5]");
}

} // namespace

FactorSet calibrate_from_targets(const CalibrationTargets& targets) {
    if (targets.component_shares.empty())
        throw Error("targets: no component shares");
    if (!(targets.card_mass_kg > 0.0))
        throw Error("targets: card_mass_kg must be > 0");

    // Use-phase magnitudes of the reference card fix the absolute scale of
    // the distribution and EoL stages per category.
    UsageScenario ref = UsageScenario::from_years(
        targets.reference_lifespan_years, targets.reference_utilization,
        targets.reference_avg_power_w, targets.reference_idle_power_w,
        targets.reference_grid_id, targets.route);
    ref.validate();
    const double kwh = lifetime_electricity_kwh(ref);

    auto grid_it = targets.grids.find(targets.reference_grid_id);
    if (grid_it == targets.grids.end())
        throw Error("targets: reference grid '" + targets.reference_grid_id +
                    "' not present in grids");
    const ImpactVector& grid = grid_it->second;

    const double route_km = great_circle_km(targets.route);
    const double mass_t = targets.card_mass_kg * (1.0 + targets.packaging_mass_factor) / 1000.0;
    if (!(route_km > 0.0) || !(mass_t > 0.0))
        throw Error("targets: zero route distance or card mass; transport factor unsolvable");

    FactorSet out;
    out.grid_mixes = targets.grids;
    out.provenance = "calibrated from targets: " + targets.provenance;

    for (const auto& [name, shares] : targets.component_shares) {
        std::array<double, kCategoryCount> factor{};
        for (auto cat : all_categories())
            factor[index_of(cat)] =
                targets.cradle_to_gate_total[cat] * shares[index_of(cat)] / 100.0;
        out.component_factors.emplace(name, ImpactVector(factor));
    }

    std::array<double, kCategoryCount> transport{};
    std::array<double, kCategoryCount> eol{};
    for (auto cat : all_categories()) {
        const std::size_t i = index_of(cat);

        double comp_sum = 0.0;
        for (const auto& [name, shares] : targets.component_shares)
            comp_sum += shares[i];
        check_share_sum("component", cat, comp_sum);

        const double stage_sum = targets.use_share[i] + targets.cradle_to_gate_share[i] +
                                 targets.distribution_share[i] + targets.eol_share[i];
        check_share_sum("stage", cat, stage_sum);

        if (!(targets.use_share[i] > 0.0))
            throw Error("targets: use share for " + std::string(category_id(cat)) +
                        " must be > 0 to anchor the per-card total");

        const double use_abs = kwh * grid[cat];
        const double card_total = use_abs / (targets.use_share[i] / 100.0);
        transport[i] = card_total * (targets.distribution_share[i] / 100.0) / (mass_t * route_km);
        eol[i] = card_total * (targets.eol_share[i] / 100.0) / targets.card_mass_kg;
    }
    out.transport_per_tkm = ImpactVector(transport);
    out.eol_per_kg = ImpactVector(eol);
    return out;
}

} // namespace gpulca
