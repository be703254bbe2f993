#include "gpulca/breakdown.hpp"

#include <algorithm>

#include "gpulca/error.hpp"

namespace gpulca {

BreakdownTable::BreakdownTable(std::vector<std::string> labels,
                               std::vector<std::array<double, kCategoryCount>> shares,
                               std::array<bool, kCategoryCount> defined,
                               ImpactVector totals)
    : labels_(std::move(labels)),
      shares_(std::move(shares)),
      defined_(defined),
      totals_(std::move(totals)) {
    if (labels_.size() != shares_.size())
        throw Error("breakdown table: label/share row count mismatch");
}

std::optional<double> BreakdownTable::share(const std::string& label,
                                            ImpactCategory cat) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        return std::nullopt;
    return share(static_cast<std::size_t>(it - labels_.begin()), cat);
}

std::optional<double> BreakdownTable::share(std::size_t label_index,
                                            ImpactCategory cat) const {
    if (label_index >= shares_.size() || !defined_[index_of(cat)])
        return std::nullopt;
    return shares_[label_index][index_of(cat)];
}

BreakdownTable share_breakdown(std::span<const LabeledImpact> parts) {
    if (parts.empty())
        throw Error("share_breakdown: empty part list");

    std::vector<ImpactVector> vectors;
    vectors.reserve(parts.size());
    for (const auto& part : parts)
        vectors.push_back(part.impacts);
    const ImpactVector totals = vec_combine(vectors);

    std::array<bool, kCategoryCount> defined{};
    for (std::size_t i = 0; i < kCategoryCount; ++i)
        defined[i] = totals.values()[i] > 0.0;

    std::vector<std::string> labels;
    std::vector<std::array<double, kCategoryCount>> shares;
    labels.reserve(parts.size());
    shares.reserve(parts.size());
    for (const auto& part : parts) {
        labels.push_back(part.label);
        std::array<double, kCategoryCount> row{};
        for (std::size_t i = 0; i < kCategoryCount; ++i)
            row[i] = defined[i] ? 100.0 * part.impacts.values()[i] / totals.values()[i]
                                : 0.0;
        shares.push_back(row);
    }
    return BreakdownTable(std::move(labels), std::move(shares), defined, totals);
}

} // namespace gpulca
