#pragma once

#include <string>
#include <vector>

#include "gpulca/breakdown.hpp"
#include "gpulca/factors.hpp"
#include "gpulca/geo.hpp"
#include "gpulca/inventory.hpp"

namespace gpulca {

inline constexpr double kHoursPerYear = 8760.0;

/// How one card is operated over its life. Lifespan is kept in hours
/// internally; the file format takes years.
struct UsageScenario {
    double lifespan_hours = 0.0;
    double utilization_ratio = 0.0;
    double avg_power_w = 0.0;
    double idle_power_w = 0.0;
    std::string grid_id;
    Route route;

    void validate() const;

    static UsageScenario from_years(double years, double utilization,
                                    double avg_power_w, double idle_power_w,
                                    std::string grid_id, Route route);
};

/// (avg_power*u + idle_power*(1-u)) * lifespan_hours / 1000.
double lifetime_electricity_kwh(const UsageScenario& s);

/// Grid vector scaled by consumed kWh.
ImpactVector use_phase_impacts(double kwh, const ImpactVector& grid_per_kwh);

struct CradleToGate {
    std::vector<LabeledImpact> parts; // one per BOM component, BOM order
    ImpactVector total;
};

/// Per-component cradle-to-gate impacts; factors are absolute per card.
CradleToGate cradle_to_gate(const GpuProduct& p, const FactorSet& f);

/// Air freight of the packaged card along the scenario route.
/// An identical-endpoint route has zero distance and yields a zero vector.
ImpactVector distribution_impacts(const GpuProduct& p, const UsageScenario& s,
                                  const FactorSet& f);

/// Cut-off allocation at the no-benefit point: treatment burdens only,
/// never negative credits.
ImpactVector eol_impacts(const GpuProduct& p, const FactorSet& f);

/// The four life-cycle stages of one card plus their sum.
struct StageBreakdown {
    CradleToGate cradle_to_gate;
    ImpactVector distribution;
    ImpactVector use;
    ImpactVector eol;
    ImpactVector total;
    double electricity_kwh = 0.0;

    /// Stage labels in lifecycle order.
    static const std::vector<std::string>& stage_labels();

    BreakdownTable stage_shares() const;
    BreakdownTable component_shares() const;
};

StageBreakdown gpu_lifecycle(const GpuProduct& p, const UsageScenario& s,
                             const FactorSet& f);

} // namespace gpulca
