#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace gpulca {

/// The 16 EF 3.0 midpoint impact categories, in canonical (serialization)
/// order. Each category carries exactly one canonical unit, fixed at build
/// time; values are never converted between units at runtime.
enum class ImpactCategory : int {
    Acidification = 0,
    ClimateChange,
    EcotoxicityFreshwater,
    EutrophicationFreshwater,
    EutrophicationMarine,
    EutrophicationTerrestrial,
    HumanToxicityCancer,
    HumanToxicityNonCancer,
    IonisingRadiation,
    LandUse,
    OzoneDepletion,
    ParticulateMatter,
    PhotochemicalOzoneFormation,
    ResourceUseFossils,
    ResourceUseMineralsMetals,
    WaterUse,
};

inline constexpr std::size_t kCategoryCount = 16;

constexpr std::array<ImpactCategory, kCategoryCount> all_categories() {
    std::array<ImpactCategory, kCategoryCount> cats{};
    for (std::size_t i = 0; i < kCategoryCount; ++i)
        cats[i] = static_cast<ImpactCategory>(i);
    return cats;
}

constexpr std::size_t index_of(ImpactCategory cat) {
    return static_cast<std::size_t>(cat);
}

/// Stable identifier used in every file format ("climate-change", ...).
std::string_view category_id(ImpactCategory cat);

/// Canonical unit string ("kg CO2 eq", "CTUh", ...).
std::string_view category_unit(ImpactCategory cat);

/// Reverse lookup; nullopt for anything outside the closed 16-id set.
std::optional<ImpactCategory> category_from_id(std::string_view id);

} // namespace gpulca
