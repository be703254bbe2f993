#include "gpulca/allocation.hpp"

#include <cmath>

#include "gpulca/error.hpp"

namespace gpulca {

void FunctionalUnitConfig::validate() const {
    if (!(gpu_hours.min > 0.0) || !(gpu_hours.max > 0.0))
        throw Error("fu: gpu_hours must be > 0");
    if (gpu_hours.min > gpu_hours.max)
        throw Error("fu: gpu_hours min exceeds max");
    if (!(parameter_count > 0.0))
        throw Error("fu: parameter_count must be > 0");
}

double active_gpu_hours(const UsageScenario& s) {
    s.validate();
    return s.lifespan_hours * s.utilization_ratio;
}

ImpactVector impact_per_active_hour(const ImpactVector& total, double hours) {
    if (!(hours > 0.0))
        throw Error("allocation: active GPU hours must be > 0 (division by zero)");
    return vec_scale(total, 1.0 / hours);
}

ImpactVector training_impacts(double gpu_hours, const ImpactVector& per_hour) {
    if (!std::isfinite(gpu_hours) || gpu_hours < 0.0)
        throw Error("allocation: gpu_hours must be finite and >= 0");
    return vec_scale(per_hour, gpu_hours);
}

double cards_required(const FunctionalUnitConfig& fu, const UsageScenario& s) {
    fu.validate();
    const double active = active_gpu_hours(s);
    if (!(active > 0.0))
        throw Error("allocation: scenario provides zero active GPU hours");
    return fu.gpu_hours.mid() / active;
}

} // namespace gpulca
