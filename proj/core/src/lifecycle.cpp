#include "gpulca/lifecycle.hpp"

#include <cmath>

#include "gpulca/error.hpp"

namespace gpulca {

void UsageScenario::validate() const {
    if (!(lifespan_hours > 0.0) || !std::isfinite(lifespan_hours))
        throw Error("scenario: lifespan must be > 0");
    if (utilization_ratio < 0.0 || utilization_ratio > 1.0)
        throw Error("scenario: utilization_ratio must be in [0, 1]");
    if (idle_power_w < 0.0)
        throw Error("scenario: idle_power_w must be >= 0");
    if (avg_power_w < idle_power_w)
        throw Error("scenario: avg_power_w must be >= idle_power_w");
    if (grid_id.empty())
        throw Error("scenario: grid_id must not be empty");
}

UsageScenario UsageScenario::from_years(double years, double utilization,
                                        double avg_power_w, double idle_power_w,
                                        std::string grid_id, Route route) {
    UsageScenario s;
    s.lifespan_hours = years * kHoursPerYear;
    s.utilization_ratio = utilization;
    s.avg_power_w = avg_power_w;
    s.idle_power_w = idle_power_w;
    s.grid_id = std::move(grid_id);
    s.route = route;
    return s;
}

double lifetime_electricity_kwh(const UsageScenario& s) {
    s.validate();
    const double u = s.utilization_ratio;
    return (s.avg_power_w * u + s.idle_power_w * (1.0 - u)) * s.lifespan_hours / 1000.0;
}

ImpactVector use_phase_impacts(double kwh, const ImpactVector& grid_per_kwh) {
    if (kwh < 0.0)
        throw Error("use phase: negative electricity consumption");
    return vec_scale(grid_per_kwh, kwh);
}

CradleToGate cradle_to_gate(const GpuProduct& p, const FactorSet& f) {
    p.validate();
    CradleToGate result;
    std::vector<ImpactVector> vectors;
    for (std::size_t i = 0; i < p.components.size(); ++i) {
        const Component& component = p.components[i];
        try {
            const ImpactVector& factor = f.component_factor(component.factor_ref);
            result.parts.push_back({component.name, factor});
            vectors.push_back(factor);
        } catch (const Error& e) {
            throw Error("bom: components[" + std::to_string(i) + "].factor_ref: " + e.what());
        }
    }
    result.total = vec_combine(vectors);
    return result;
}

ImpactVector distribution_impacts(const GpuProduct& p, const UsageScenario& s,
                                  const FactorSet& f) {
    const double mass_t = p.card_mass_kg * (1.0 + p.packaging_mass_factor) / 1000.0;
    const double km = great_circle_km(s.route);
    return vec_scale(f.transport_per_tkm, mass_t * km);
}

ImpactVector eol_impacts(const GpuProduct& p, const FactorSet& f) {
    return vec_scale(f.eol_per_kg, p.card_mass_kg);
}

const std::vector<std::string>& StageBreakdown::stage_labels() {
    static const std::vector<std::string> labels = {
        "cradle-to-gate", "distribution", "use", "end-of-life"};
    return labels;
}

BreakdownTable StageBreakdown::stage_shares() const {
    const std::vector<LabeledImpact> stages = {
        {stage_labels()[0], cradle_to_gate.total},
        {stage_labels()[1], distribution},
        {stage_labels()[2], use},
        {stage_labels()[3], eol},
    };
    return share_breakdown(stages);
}

BreakdownTable StageBreakdown::component_shares() const {
    return share_breakdown(cradle_to_gate.parts);
}

StageBreakdown gpu_lifecycle(const GpuProduct& p, const UsageScenario& s,
                             const FactorSet& f) {
    StageBreakdown b;
    b.cradle_to_gate = cradle_to_gate(p, f);
    b.distribution = distribution_impacts(p, s, f);
    b.electricity_kwh = lifetime_electricity_kwh(s);
    b.use = use_phase_impacts(b.electricity_kwh, f.grid(s.grid_id));
    b.eol = eol_impacts(p, f);
    b.total = vec_combine({b.cradle_to_gate.total, b.distribution, b.use, b.eol});
    return b;
}

} // namespace gpulca
