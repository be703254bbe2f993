#include "gpulca/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "gpulca/error.hpp"

namespace gpulca {

PbNormalization pb_normalize(const ImpactVector& v, const PBReference& pb) {
    pb.validate();
    PbNormalization out;
    for (auto cat : all_categories()) {
        if (cat == ImpactCategory::LandUse)
            continue; // no PB factor exists; explicitly absent in the result
        const double per_capita = *pb.budgets[index_of(cat)] / pb.population;
        out.person_equivalents[index_of(cat)] = v[cat] / per_capita;
    }
    return out;
}

std::string_view sweep_parameter_id(SweepParameter p) {
    switch (p) {
    case SweepParameter::AvgPowerW: return "avg_power_w";
    case SweepParameter::LifespanYears: return "lifespan_years";
    case SweepParameter::UtilizationRatio: return "utilization_ratio";
    }
    return "";
}

std::optional<SweepParameter> sweep_parameter_from_id(std::string_view id) {
    if (id == "avg_power_w") return SweepParameter::AvgPowerW;
    if (id == "lifespan_years") return SweepParameter::LifespanYears;
    if (id == "utilization_ratio") return SweepParameter::UtilizationRatio;
    return std::nullopt;
}

namespace {

UsageScenario with_setting(const UsageScenario& ref, SweepParameter p, double value) {
    UsageScenario s = ref;
    switch (p) {
    case SweepParameter::AvgPowerW:
        s.avg_power_w = value;
        break;
    case SweepParameter::LifespanYears:
        s.lifespan_hours = value * kHoursPerYear;
        break;
    case SweepParameter::UtilizationRatio:
        s.utilization_ratio = value;
        break;
    }
    return s;
}

ImpactVector fu_impacts(const UsageScenario& s, const FunctionalUnitConfig& fu,
                        const GpuProduct& p, const FactorSet& f) {
    const StageBreakdown card = gpu_lifecycle(p, s, f);
    const double active = active_gpu_hours(s);
    if (!(active > 0.0))
        throw Error("sweep: setting produces zero active GPU hours");
    return training_impacts(fu.gpu_hours.mid(), impact_per_active_hour(card.total, active));
}

} // namespace

SweepResult sensitivity_sweep(const SweepSpec& spec, const FunctionalUnitConfig& fu,
                              const GpuProduct& p, const FactorSet& f) {
    if (spec.values.empty())
        throw Error("sweep: no values");
    spec.reference.validate();

    SweepResult result;
    result.parameter = spec.parameter;
    switch (spec.parameter) {
    case SweepParameter::AvgPowerW:
        result.reference_value = spec.reference.avg_power_w;
        break;
    case SweepParameter::LifespanYears:
        result.reference_value = spec.reference.lifespan_hours / kHoursPerYear;
        break;
    case SweepParameter::UtilizationRatio:
        result.reference_value = spec.reference.utilization_ratio;
        break;
    }

    result.reference_impacts = fu_impacts(spec.reference, fu, p, f);
    for (auto cat : all_categories()) {
        if (!(result.reference_impacts[cat] > 0.0))
            throw Error("sweep: reference FU impacts are zero for " +
                        std::string(category_id(cat)) +
                        "; percent-of-reference undefined");
    }

    // Settings are independent; evaluation order never affects assembly.
    for (double value : spec.values) {
        const UsageScenario s = with_setting(spec.reference, spec.parameter, value);
        try {
            s.validate();
        } catch (const Error& e) {
            throw Error("sweep: setting " + std::to_string(value) + ": " + e.what());
        }
        const ImpactVector impacts = fu_impacts(s, fu, p, f);
        std::array<double, kCategoryCount> row{};
        for (auto cat : all_categories())
            row[index_of(cat)] = 100.0 * impacts[cat] / result.reference_impacts[cat];
        result.settings.push_back(value);
        result.percent_of_reference.push_back(row);
    }
    return result;
}

GridSweepResult grid_sweep(std::span<const SweepSpec> specs, const FunctionalUnitConfig& fu,
                           const GpuProduct& p, const FactorSet& f) {
    if (specs.empty())
        throw Error("grid sweep: no sweep specs");
    for (std::size_t i = 1; i < specs.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (specs[i].parameter == specs[j].parameter)
                throw Error("grid sweep: duplicate parameter " +
                            std::string(sweep_parameter_id(specs[i].parameter)));
    const UsageScenario& reference = specs.front().reference;
    reference.validate();

    GridSweepResult result;
    for (const auto& spec : specs) {
        if (spec.values.empty())
            throw Error("grid sweep: empty value list for " +
                        std::string(sweep_parameter_id(spec.parameter)));
        result.parameters.push_back(spec.parameter);
    }
    result.reference_impacts = fu_impacts(reference, fu, p, f);
    for (auto cat : all_categories())
        if (!(result.reference_impacts[cat] > 0.0))
            throw Error("grid sweep: reference FU impacts are zero for " +
                        std::string(category_id(cat)));

    std::vector<double> combo(specs.size());
    const std::function<void(std::size_t, const UsageScenario&)> enumerate =
        [&](std::size_t depth, const UsageScenario& scenario) {
            if (depth == specs.size()) {
                scenario.validate();
                const ImpactVector impacts = fu_impacts(scenario, fu, p, f);
                std::array<double, kCategoryCount> row{};
                for (auto cat : all_categories())
                    row[index_of(cat)] =
                        100.0 * impacts[cat] / result.reference_impacts[cat];
                result.settings.push_back(combo);
                result.percent_of_reference.push_back(row);
                return;
            }
            for (double value : specs[depth].values) {
                combo[depth] = value;
                enumerate(depth + 1,
                          with_setting(scenario, specs[depth].parameter, value));
            }
        };
    enumerate(0, reference);
    return result;
}

BreakdownDiff compare_breakdowns(const BreakdownTable& a, const BreakdownTable& b,
                                 const std::map<std::string, std::string>& label_map) {
    BreakdownDiff diff;
    for (const auto& label_a : a.labels()) {
        auto pairing = label_map.find(label_a);
        if (pairing == label_map.end())
            throw Error("compare: label '" + label_a + "' has no pairing in the label map");
        const std::string& label_b = pairing->second;
        if (std::find(b.labels().begin(), b.labels().end(), label_b) == b.labels().end())
            throw Error("compare: paired label '" + label_b + "' missing from second table");

        std::array<std::optional<double>, kCategoryCount> row{};
        for (auto cat : all_categories()) {
            const auto share_a = a.share(label_a, cat);
            const auto share_b = b.share(label_b, cat);
            if (share_a && share_b)
                row[index_of(cat)] = *share_a - *share_b;
        }
        diff.labels.push_back(label_a);
        diff.diff_points.push_back(row);
    }
    return diff;
}

} // namespace gpulca
