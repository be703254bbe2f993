#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpulca/impact_vector.hpp"

namespace gpulca {

/// Percentage contribution of each labeled part to the per-category totals.
/// A category whose total is zero has no defined shares; it is marked
/// undefined rather than reported as 0/0.
class BreakdownTable {
public:
    BreakdownTable(std::vector<std::string> labels,
                   std::vector<std::array<double, kCategoryCount>> shares,
                   std::array<bool, kCategoryCount> defined,
                   ImpactVector totals);

    const std::vector<std::string>& labels() const { return labels_; }
    const ImpactVector& totals() const { return totals_; }
    bool is_defined(ImpactCategory cat) const { return defined_[index_of(cat)]; }

    /// Share in percent, or nullopt when the label is unknown or the
    /// category total is zero.
    std::optional<double> share(const std::string& label, ImpactCategory cat) const;
    std::optional<double> share(std::size_t label_index, ImpactCategory cat) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::array<double, kCategoryCount>> shares_;
    std::array<bool, kCategoryCount> defined_;
    ImpactVector totals_;
};

/// shares[label][cat] = 100 * part[cat] / total[cat], totals attached.
/// Rows sum to 100 within 1e-9 for every category with a positive total.
BreakdownTable share_breakdown(std::span<const LabeledImpact> parts);

} // namespace gpulca
