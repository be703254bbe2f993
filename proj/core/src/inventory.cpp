#include "gpulca/inventory.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gpulca/error.hpp"
#include "gpulca/factors.hpp"

namespace gpulca {

bool is_known_component_name(std::string_view name) {
    return std::find(kComponentNames.begin(), kComponentNames.end(), name) !=
           kComponentNames.end();
}

void GpuProduct::validate() const {
    if (components.empty())
        throw Error("bom: empty components list");
    if (!(card_mass_kg > 0.0))
        throw Error("bom: card_mass_kg must be > 0");
    if (packaging_mass_factor < 0.0)
        throw Error("bom: packaging_mass_factor must be >= 0");

    std::set<std::string> seen;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& c = components[i];
        const std::string where = "components[" + std::to_string(i) + "]";
        if (!is_known_component_name(c.name))
            throw Error("bom: " + where + ".name: unknown component name '" + c.name + "'");
        if (!seen.insert(c.name).second)
            throw Error("bom: " + where + ".name: duplicate component name '" + c.name + "'");
        if (c.mass_kg < 0.0 || !std::isfinite(c.mass_kg))
            throw Error("bom: " + where + ".mass_kg: must be >= 0");
        if (c.die_area_cm2 && (*c.die_area_cm2 < 0.0 || !std::isfinite(*c.die_area_cm2)))
            throw Error("bom: " + where + ".die_area_cm2: must be >= 0");
        if (c.factor_ref.empty())
            throw Error("bom: " + where + ".factor_ref: must not be empty");
    }
}

LossModel::LossModel(std::vector<LossTier> tiers) : tiers_(std::move(tiers)) {
    if (tiers_.empty())
        throw Error("loss model: no tiers");
    for (std::size_t i = 0; i < tiers_.size(); ++i) {
        if (tiers_[i].loss_ratio < 1.0)
            throw Error("loss model: tiers[" + std::to_string(i) + "].loss_ratio must be >= 1");
        if (i > 0) {
            if (tiers_[i].price_threshold >= tiers_[i - 1].price_threshold)
                throw Error("loss model: tiers must have strictly descending price thresholds");
            if (tiers_[i].loss_ratio < tiers_[i - 1].loss_ratio)
                throw Error("loss model: loss ratio must be non-increasing with price");
        }
    }
}

double LossModel::ratio_for_price(double price_per_kg) const {
    for (const auto& tier : tiers_) {
        if (price_per_kg >= tier.price_threshold)
            return tier.loss_ratio;
    }
    return tiers_.back().loss_ratio;
}

LossModel LossModel::default_three_tier() {
    return LossModel({{10000.0, 1.1}, {100.0, 1.4}, {0.0, 2.0}});
}

std::map<std::string, double> apply_loss_ratios(const ElementalComposition& net,
                                                const LossModel& model) {
    std::map<std::string, double> gross;
    for (const auto& [symbol, entry] : net.elements) {
        if (!(entry.price_per_kg > 0.0))
            throw Error("composition: element '" + symbol + "' has no positive price");
        if (entry.net_mass_g < 0.0)
            throw Error("composition: element '" + symbol + "' has negative mass");
        gross[symbol] = entry.net_mass_g * model.ratio_for_price(entry.price_per_kg);
    }
    return gross;
}

void AdjustmentDeltas::validate() const {
    for (std::size_t i = 0; i < kCategoryCount; ++i) {
        if (!(multipliers[i] > 0.0) || !std::isfinite(multipliers[i]))
            throw Error("deltas: multiplier for " +
                        std::string(category_id(static_cast<ImpactCategory>(i))) +
                        " must be a positive finite number");
    }
}

AdjustmentDeltas AdjustmentDeltas::identity() {
    AdjustmentDeltas d;
    d.multipliers.fill(1.0);
    return d;
}

FactorSet adjust_inventory(const FactorSet& base, const AdjustmentDeltas& deltas) {
    deltas.validate();
    FactorSet adjusted = base;
    for (auto& [ref, factor] : adjusted.component_factors) {
        std::array<double, kCategoryCount> scaled{};
        for (std::size_t i = 0; i < kCategoryCount; ++i)
            scaled[i] = factor.values()[i] * deltas.multipliers[i];
        factor = ImpactVector(scaled);
    }
    return adjusted;
}

} // namespace gpulca
