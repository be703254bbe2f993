#pragma once

#include <optional>
#include <string>

#include "gpulca/impact_vector.hpp"
#include "gpulca/lifecycle.hpp"

namespace gpulca {

/// Training GPU hours; min == max for a point estimate. The midpoint is the
/// default reporting value when a range is given.
struct GpuHoursRange {
    double min = 0.0;
    double max = 0.0;

    double mid() const { return 0.5 * (min + max); }
    bool is_range() const { return min != max; }
};

/// The parametric functional unit: one complete training of a named model.
struct FunctionalUnitConfig {
    std::string model_name;
    double parameter_count = 0.0;
    GpuHoursRange gpu_hours;
    std::string grid_id;
    int year = 0;
    std::string scenario_ref;

    void validate() const;
};

/// lifespan_hours * utilization_ratio: the allocation basis for all card
/// impacts, idle-time electricity included.
double active_gpu_hours(const UsageScenario& s);

/// Total card impacts distributed across the active hours.
/// hours == 0 is a hard error, never an infinity.
ImpactVector impact_per_active_hour(const ImpactVector& total, double hours);

/// Impacts of one training run: per-active-hour impacts times GPU hours.
ImpactVector training_impacts(double gpu_hours, const ImpactVector& per_hour);

/// Fractional card count needed to supply the FU's GPU hours; reported
/// as-is, no ceiling.
double cards_required(const FunctionalUnitConfig& fu, const UsageScenario& s);

} // namespace gpulca
