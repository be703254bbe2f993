#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpulca/impact_vector.hpp"

namespace gpulca {

struct FactorSet;

/// Closed set of component-group names from the card teardown.
inline constexpr std::array<std::string_view, 6> kComponentNames = {
    "gpu-chip", "pcb", "heatsink", "pop", "casing", "upstream-distribution",
};

bool is_known_component_name(std::string_view name);

/// One teardown component group. Factors in the calibrated dataset are
/// absolute per-card values; mass and die area are retained as provenance
/// and for future per-unit factor models.
struct Component {
    std::string name;
    double mass_kg = 0.0;
    std::optional<double> die_area_cm2;
    std::string factor_ref;
    std::optional<std::string> composition_ref;
};

struct GpuProduct {
    std::vector<Component> components;
    double card_mass_kg = 0.0;
    double packaging_mass_factor = 0.0;

    /// Throws on violated invariants (empty BOM, duplicate names, negative
    /// mass, unknown component name). Factor refs are resolved against a
    /// FactorSet separately.
    void validate() const;
};

/// Net elemental masses measured in the final product plus reference prices
/// (prices are used only ordinally, to pick a loss tier).
struct ElementEntry {
    double net_mass_g = 0.0;
    double price_per_kg = 0.0;
};

struct ElementalComposition {
    std::map<std::string, ElementEntry> elements;
};

/// Manufacturing losses as a descending step function of element price:
/// the more costly the element, the lower the assumed loss.
struct LossTier {
    double price_threshold = 0.0; // applies to prices >= threshold
    double loss_ratio = 1.0;      // >= 1
};

class LossModel {
public:
    explicit LossModel(std::vector<LossTier> tiers);

    /// Ratio of the first tier (descending threshold order) whose threshold
    /// the price reaches; the lowest tier catches everything below.
    double ratio_for_price(double price_per_kg) const;

    const std::vector<LossTier>& tiers() const { return tiers_; }

    /// Default three-tier model: precious (>= 10000/kg, x1.1),
    /// intermediate (>= 100/kg, x1.4), base (x2.0).
    static LossModel default_three_tier();

private:
    std::vector<LossTier> tiers_;
};

/// gross[e] = net[e] * ratio(price[e]); gross >= net element-wise.
std::map<std::string, double> apply_loss_ratios(const ElementalComposition& net,
                                                const LossModel& model);

/// Per-category multipliers derived from the elemental analysis, applied to
/// cradle-to-gate factors only.
struct AdjustmentDeltas {
    std::array<double, kCategoryCount> multipliers{};

    double operator[](ImpactCategory cat) const { return multipliers[index_of(cat)]; }
    void validate() const; // all > 0 and finite

    static AdjustmentDeltas identity();
};

/// Multiplies every component (cradle-to-gate) factor by the per-category
/// delta; grid, transport and EoL factors are returned untouched.
FactorSet adjust_inventory(const FactorSet& base, const AdjustmentDeltas& deltas);

} // namespace gpulca
