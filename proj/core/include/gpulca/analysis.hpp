#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpulca/allocation.hpp"
#include "gpulca/breakdown.hpp"
#include "gpulca/factors.hpp"
#include "gpulca/lifecycle.hpp"

namespace gpulca {

/// Person-year equivalents of the annual per-capita planetary-boundary
/// budget; land use carries no PB factor and stays unset.
struct PbNormalization {
    std::array<std::optional<double>, kCategoryCount> person_equivalents{};
};

/// result[cat] = v[cat] / (budget[cat] / population).
PbNormalization pb_normalize(const ImpactVector& v, const PBReference& pb);

enum class SweepParameter {
    AvgPowerW,
    LifespanYears,
    UtilizationRatio,
};

std::string_view sweep_parameter_id(SweepParameter p);
std::optional<SweepParameter> sweep_parameter_from_id(std::string_view id);

/// One-at-a-time sweep over a single scenario parameter.
struct SweepSpec {
    SweepParameter parameter = SweepParameter::AvgPowerW;
    std::vector<double> values;
    UsageScenario reference;
};

/// Percent-of-reference FU impacts per setting and category. The reference
/// setting evaluates to exactly 100 in every category.
struct SweepResult {
    SweepParameter parameter;
    double reference_value = 0.0;
    std::vector<double> settings;
    std::vector<std::array<double, kCategoryCount>> percent_of_reference;
    ImpactVector reference_impacts;
};

/// Re-runs the full pipeline (electricity, stages, per-hour allocation,
/// FU scaling) per setting and divides by the reference FU impacts.
SweepResult sensitivity_sweep(const SweepSpec& spec, const FunctionalUnitConfig& fu,
                              const GpuProduct& p, const FactorSet& f);

/// Factorial escape hatch: cross product of several one-parameter sweeps
/// sharing one reference scenario. One row per combination, in row-major
/// order of the spec list.
struct GridSweepResult {
    std::vector<SweepParameter> parameters;
    std::vector<std::vector<double>> settings; // one value per parameter, per row
    std::vector<std::array<double, kCategoryCount>> percent_of_reference;
    ImpactVector reference_impacts;
};

GridSweepResult grid_sweep(std::span<const SweepSpec> specs, const FunctionalUnitConfig& fu,
                           const GpuProduct& p, const FactorSet& f);

/// Percentage-point differences a - b for paired labels. Categories which
/// are undefined in either table stay undefined in the result.
struct BreakdownDiff {
    std::vector<std::string> labels; // labels of `a`
    std::vector<std::array<std::optional<double>, kCategoryCount>> diff_points;
};

BreakdownDiff compare_breakdowns(const BreakdownTable& a, const BreakdownTable& b,
                                 const std::map<std::string, std::string>& label_map);

} // namespace gpulca
