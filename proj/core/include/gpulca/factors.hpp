#pragma once

#include <map>
#include <optional>
#include <string>

#include "gpulca/breakdown.hpp"
#include "gpulca/geo.hpp"
#include "gpulca/impact_vector.hpp"

namespace gpulca {

/// A complete impact-factor dataset: per-component cradle-to-gate vectors
/// (absolute per card in the calibrated set), grid mixes per kWh, air
/// freight per tonne-km, and EoL treatment per kg. Immutable after load.
struct FactorSet {
    std::map<std::string, ImpactVector> component_factors;
    std::map<std::string, ImpactVector> grid_mixes;
    ImpactVector transport_per_tkm;
    ImpactVector eol_per_kg;
    std::string provenance;

    const ImpactVector& grid(const std::string& grid_id) const;
    const ImpactVector& component_factor(const std::string& factor_ref) const;
};

/// Planetary-boundary annual global budgets, one per category except land
/// use (no PB normalization factor exists for it).
struct PBReference {
    std::array<std::optional<double>, kCategoryCount> budgets{};
    double population = 8.01e9;

    void validate() const; // exactly 15 budgets, all > 0, population > 0
};

/// Published per-card anchors inverted into absolute factors: cradle-to-gate
/// totals with component shares, plus stage shares tied to a reference
/// scenario that fixes the use-phase magnitudes.
struct CalibrationTargets {
    ImpactVector cradle_to_gate_total;
    std::map<std::string, std::array<double, kCategoryCount>> component_shares;
    std::array<double, kCategoryCount> use_share{};
    std::array<double, kCategoryCount> cradle_to_gate_share{};
    std::array<double, kCategoryCount> distribution_share{};
    std::array<double, kCategoryCount> eol_share{};
    double card_mass_kg = 0.0;
    double packaging_mass_factor = 0.0;
    Route route;
    double reference_lifespan_years = 0.0;
    double reference_utilization = 0.0;
    double reference_avg_power_w = 0.0;
    double reference_idle_power_w = 0.0;
    std::string reference_grid_id;
    std::map<std::string, ImpactVector> grids;
    std::string provenance;
};

/// Inverts the targets into a FactorSet:
///   component factor = cradle-to-gate total x component share / 100
///   transport per tkm solved from the distribution share and route mass-km
///   EoL per kg solved from the EoL share and card mass
/// Component and stage shares must sum to 100 +- 0.5 per category.
FactorSet calibrate_from_targets(const CalibrationTargets& targets);

} // namespace gpulca
