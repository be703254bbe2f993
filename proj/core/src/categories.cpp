#include "gpulca/categories.hpp"

namespace gpulca {

namespace {

struct CategoryInfo {
    std::string_view id;
    std::string_view unit;
};

// Canonical order; ids double as file-format keys and must never change.
constexpr std::array<CategoryInfo, kCategoryCount> kCategories = {{
    {"acidification", "mol H+ eq"},
    {"climate-change", "kg CO2 eq"},
    {"ecotoxicity-freshwater", "CTUe"},
    {"eutrophication-freshwater", "kg P eq"},
    {"eutrophication-marine", "kg N eq"},
    {"eutrophication-terrestrial", "mol N eq"},
    {"human-toxicity-cancer", "CTUh"},
    {"human-toxicity-non-cancer", "CTUh"},
    {"ionising-radiation", "kBq U-235 eq"},
    {"land-use", "Pt"},
    {"ozone-depletion", "kg CFC11 eq"},
    {"particulate-matter", "disease inc."},
    {"photochemical-ozone-formation", "kg NMVOC eq"},
    {"resource-use-fossils", "MJ"},
    {"resource-use-minerals-metals", "kg Sb eq"},
    {"water-use", "m3 depriv."},
}};

} // namespace

std::string_view category_id(ImpactCategory cat) {
    return kCategories[index_of(cat)].id;
}

std::string_view category_unit(ImpactCategory cat) {
    return kCategories[index_of(cat)].unit;
}

std::optional<ImpactCategory> category_from_id(std::string_view id) {
    for (std::size_t i = 0; i < kCategoryCount; ++i) {
        if (kCategories[i].id == id)
            return static_cast<ImpactCategory>(i);
    }
    return std::nullopt;
}

} // namespace gpulca
