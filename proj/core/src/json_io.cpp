#include "gpulca/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gpulca/error.hpp"

namespace gpulca {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_text(const std::string& text, const std::string& doc) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(doc + ": parse error: " + e.what());
    }
}

const json& member(const json& node, const char* key, const std::string& where) {
    if (!node.is_object())
        throw Error(where + ": expected an object");
    auto it = node.find(key);
    if (it == node.end())
        throw Error(where + "." + key + ": missing");
    return *it;
}

double number(const json& node, const std::string& where) {
    if (!node.is_number())
        throw Error(where + ": expected a number");
    return node.get<double>();
}

std::string string_value(const json& node, const std::string& where) {
    if (!node.is_string())
        throw Error(where + ": expected a string");
    return node.get<std::string>();
}

/// {"<category-id>": number} covering all 16 categories, no extras.
ImpactVector impact_vector(const json& node, const std::string& where) {
    if (!node.is_object())
        throw Error(where + ": expected a category/value object");
    std::array<double, kCategoryCount> values{};
    std::array<bool, kCategoryCount> seen{};
    for (const auto& [key, value] : node.items()) {
        auto cat = category_from_id(key);
        if (!cat)
            throw Error(where + "." + key + ": unknown impact category");
        values[index_of(*cat)] = number(value, where + "." + key);
        seen[index_of(*cat)] = true;
    }
    for (auto cat : all_categories()) {
        if (!seen[index_of(cat)])
            throw Error(where + ": missing category " + std::string(category_id(cat)));
    }
    try {
        return ImpactVector(values);
    } catch (const Error& e) {
        throw Error(where + ": " + e.what());
    }
}

std::array<double, kCategoryCount> share_row(const json& node, const std::string& where) {
    std::array<double, kCategoryCount> row{};
    std::array<bool, kCategoryCount> seen{};
    if (!node.is_object())
        throw Error(where + ": expected a category/share object");
    for (const auto& [key, value] : node.items()) {
        auto cat = category_from_id(key);
        if (!cat)
            throw Error(where + "." + key + ": unknown impact category");
        row[index_of(*cat)] = number(value, where + "." + key);
        seen[index_of(*cat)] = true;
    }
    for (auto cat : all_categories())
        if (!seen[index_of(cat)])
            throw Error(where + ": missing category " + std::string(category_id(cat)));
    return row;
}

Route route_value(const json& node, const std::string& where) {
    auto point = [&](const json& p, const std::string& pw) {
        if (!p.is_array() || p.size() != 2)
            throw Error(pw + ": expected [lat, lon]");
        return GeoPoint{number(p[0], pw + "[0]"), number(p[1], pw + "[1]")};
    };
    Route r;
    r.from = point(member(node, "from", where), where + ".from");
    r.to = point(member(node, "to", where), where + ".to");
    return r;
}

ordered_json vector_to_json(const ImpactVector& v) {
    ordered_json out = ordered_json::object();
    for (auto cat : all_categories())
        out[std::string(category_id(cat))] = v[cat];
    return out;
}

} // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(path.string() + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(path.string() + ": cannot open file for writing");
    out << content;
    if (!out)
        throw Error(path.string() + ": write failed");
}

GpuProduct parse_bom(const std::string& text, const std::string& doc) {
    const json root = parse_text(text, doc);
    GpuProduct product;
    product.card_mass_kg = number(member(root, "card_mass_kg", doc), doc + ".card_mass_kg");
    product.packaging_mass_factor =
        number(member(root, "packaging_mass_factor", doc), doc + ".packaging_mass_factor");

    const json& components = member(root, "components", doc);
    if (!components.is_array())
        throw Error(doc + ".components: expected an array");
    for (std::size_t i = 0; i < components.size(); ++i) {
        const std::string where = doc + ".components[" + std::to_string(i) + "]";
        const json& node = components[i];
        Component c;
        c.name = string_value(member(node, "name", where), where + ".name");
        c.mass_kg = number(member(node, "mass_kg", where), where + ".mass_kg");
        c.factor_ref = string_value(member(node, "factor_ref", where), where + ".factor_ref");
        if (node.contains("die_area_cm2"))
            c.die_area_cm2 = number(node["die_area_cm2"], where + ".die_area_cm2");
        if (node.contains("composition_ref"))
            c.composition_ref =
                string_value(node["composition_ref"], where + ".composition_ref");
        product.components.push_back(std::move(c));
    }
    try {
        product.validate();
    } catch (const Error& e) {
        throw Error(doc + ": " + e.what());
    }
    return product;
}

GpuProduct load_bom(const std::filesystem::path& path) {
    return parse_bom(read_file(path), path.filename().string());
}

FactorSet parse_factors(const std::string& text, const std::string& doc) {
    const json root = parse_text(text, doc);
    FactorSet f;

    // optional self-describing unit block, validated against the canonical table
    if (root.contains("units")) {
        const json& units = root["units"];
        if (!units.is_object())
            throw Error(doc + ".units: expected an object");
        for (const auto& [key, value] : units.items()) {
            auto cat = category_from_id(key);
            if (!cat)
                throw Error(doc + ".units." + key + ": unknown impact category");
            const std::string unit = string_value(value, doc + ".units." + key);
            if (unit != category_unit(*cat))
                throw Error(doc + ".units." + key + ": unit '" + unit +
                            "' does not match canonical unit '" +
                            std::string(category_unit(*cat)) + "'");
        }
    }

    const json& components = member(root, "components", doc);
    if (!components.is_object())
        throw Error(doc + ".components: expected an object");
    for (const auto& [ref, node] : components.items())
        f.component_factors.emplace(ref, impact_vector(node, doc + ".components." + ref));

    const json& grids = member(root, "grids", doc);
    if (!grids.is_object())
        throw Error(doc + ".grids: expected an object");
    for (const auto& [id, node] : grids.items())
        f.grid_mixes.emplace(id, impact_vector(node, doc + ".grids." + id));

    f.transport_per_tkm =
        impact_vector(member(root, "transport_per_tkm", doc), doc + ".transport_per_tkm");
    f.eol_per_kg = impact_vector(member(root, "eol_per_kg", doc), doc + ".eol_per_kg");
    if (root.contains("provenance"))
        f.provenance = string_value(root["provenance"], doc + ".provenance");
    return f;
}

FactorSet load_factors(const std::filesystem::path& path) {
    return parse_factors(read_file(path), path.filename().string());
}

std::string serialize_factors(const FactorSet& f) {
    ordered_json root = ordered_json::object();
    root["provenance"] = f.provenance;
    ordered_json units = ordered_json::object();
    for (auto cat : all_categories())
        units[std::string(category_id(cat))] = std::string(category_unit(cat));
    root["units"] = units;
    ordered_json components = ordered_json::object();
    for (const auto& [ref, factor] : f.component_factors) // std::map: sorted keys
        components[ref] = vector_to_json(factor);
    root["components"] = components;
    ordered_json grids = ordered_json::object();
    for (const auto& [id, grid] : f.grid_mixes)
        grids[id] = vector_to_json(grid);
    root["grids"] = grids;
    root["transport_per_tkm"] = vector_to_json(f.transport_per_tkm);
    root["eol_per_kg"] = vector_to_json(f.eol_per_kg);
    return root.dump(2) + "\n";
}

AdjustmentDeltas parse_deltas(const std::string& text, const std::string& doc) {
    const json root = parse_text(text, doc);
    AdjustmentDeltas deltas;
    deltas.multipliers = share_row(root, doc);
    try {
        deltas.validate();
    } catch (const Error& e) {
        throw Error(doc + ": " + e.what());
    }
    return deltas;
}

AdjustmentDeltas load_deltas(const std::filesystem::path& path) {
    return parse_deltas(read_file(path), path.filename().string());
}

PBReference parse_pb(const std::string& text, const std::string& doc) {
    const json root = parse_text(text, doc);
    PBReference pb;
    pb.population = number(member(root, "population", doc), doc + ".population");
    const json& budgets = member(root, "budgets", doc);
    if (!budgets.is_object())
        throw Error(doc + ".budgets: expected an object");
    for (const auto& [key, value] : budgets.items()) {
        auto cat = category_from_id(key);
        if (!cat)
            throw Error(doc + ".budgets." + key + ": unknown impact category");
        pb.budgets[index_of(*cat)] = number(value, doc + ".budgets." + key);
    }
    try {
        pb.validate();
    } catch (const Error& e) {
        throw Error(doc + ": " + e.what());
    }
    return pb;
}

PBReference load_pb(const std::filesystem::path& path) {
    return parse_pb(read_file(path), path.filename().string());
}

UsageScenario parse_scenario(const std::string& text, const std::string& doc) {
    const json root = parse_text(text, doc);
    UsageScenario s = UsageScenario::from_years(
        number(member(root, "lifespan_years", doc), doc + ".lifespan_years"),
        number(member(root, "utilization_ratio", doc), doc + ".utilization_ratio"),
        number(member(root, "avg_power_w", doc), doc + ".avg_power_w"),
        number(member(root, "idle_power_w", doc), doc + ".idle_power_w"),
        string_value(member(root, "grid_id", doc), doc + ".grid_id"),
        route_value(member(root, "route", doc), doc + ".route"));
    try {
        s.validate();
    } catch (const Error& e) {
        throw Error(doc + ": " + e.what());
    }
    return s;
}

UsageScenario load_scenario(const std::filesystem::path& path) {
    return parse_scenario(read_file(path), path.filename().string());
}

FunctionalUnitConfig parse_fu(const std::string& text, const std::string& doc) {
    const json root = parse_text(text, doc);
    FunctionalUnitConfig fu;
    fu.model_name = string_value(member(root, "model_name", doc), doc + ".model_name");
    fu.parameter_count =
        number(member(root, "parameter_count", doc), doc + ".parameter_count");
    const json& hours = member(root, "gpu_hours", doc);
    if (hours.is_number()) {
        fu.gpu_hours.min = fu.gpu_hours.max = hours.get<double>();
    } else if (hours.is_object()) {
        fu.gpu_hours.min = number(member(hours, "min", doc + ".gpu_hours"), doc + ".gpu_hours.min");
        fu.gpu_hours.max = number(member(hours, "max", doc + ".gpu_hours"), doc + ".gpu_hours.max");
    } else {
        throw Error(doc + ".gpu_hours: expected a number or {\"min\", \"max\"}");
    }
    fu.grid_id = string_value(member(root, "grid_id", doc), doc + ".grid_id");
    fu.year = static_cast<int>(number(member(root, "year", doc), doc + ".year"));
    fu.scenario_ref = string_value(member(root, "scenario_ref", doc), doc + ".scenario_ref");
    try {
        fu.validate();
    } catch (const Error& e) {
        throw Error(doc + ": " + e.what());
    }
    return fu;
}

FunctionalUnitConfig load_fu(const std::filesystem::path& path) {
    return parse_fu(read_file(path), path.filename().string());
}

CalibrationTargets parse_targets(const std::string& text, const std::string& doc) {
    const json root = parse_text(text, doc);
    CalibrationTargets t;
    t.cradle_to_gate_total =
        impact_vector(member(root, "cradle_to_gate_total", doc), doc + ".cradle_to_gate_total");
    t.card_mass_kg = number(member(root, "card_mass_kg", doc), doc + ".card_mass_kg");
    t.packaging_mass_factor =
        number(member(root, "packaging_mass_factor", doc), doc + ".packaging_mass_factor");
    t.route = route_value(member(root, "route", doc), doc + ".route");

    const json& scenario = member(root, "reference_scenario", doc);
    const std::string sw = doc + ".reference_scenario";
    t.reference_lifespan_years = number(member(scenario, "lifespan_years", sw), sw + ".lifespan_years");
    t.reference_utilization = number(member(scenario, "utilization_ratio", sw), sw + ".utilization_ratio");
    t.reference_avg_power_w = number(member(scenario, "avg_power_w", sw), sw + ".avg_power_w");
    t.reference_idle_power_w = number(member(scenario, "idle_power_w", sw), sw + ".idle_power_w");
    t.reference_grid_id = string_value(member(scenario, "grid_id", sw), sw + ".grid_id");

    const json& grids = member(root, "grids", doc);
    if (!grids.is_object())
        throw Error(doc + ".grids: expected an object");
    for (const auto& [id, node] : grids.items())
        t.grids.emplace(id, impact_vector(node, doc + ".grids." + id));

    const json& comp_shares = member(root, "component_shares", doc);
    if (!comp_shares.is_object())
        throw Error(doc + ".component_shares: expected an object");
    for (const auto& [name, node] : comp_shares.items())
        t.component_shares.emplace(name, share_row(node, doc + ".component_shares." + name));

    const json& stage_shares = member(root, "stage_shares", doc);
    const std::string stw = doc + ".stage_shares";
    t.use_share = share_row(member(stage_shares, "use", stw), stw + ".use");
    t.cradle_to_gate_share =
        share_row(member(stage_shares, "cradle-to-gate", stw), stw + ".cradle-to-gate");
    t.distribution_share =
        share_row(member(stage_shares, "distribution", stw), stw + ".distribution");
    t.eol_share = share_row(member(stage_shares, "eol", stw), stw + ".eol");

    if (root.contains("provenance"))
        t.provenance = string_value(root["provenance"], doc + ".provenance");
    return t;
}

CalibrationTargets load_targets(const std::filesystem::path& path) {
    return parse_targets(read_file(path), path.filename().string());
}

SweepSpecFile parse_sweep_spec(const std::string& text, const std::string& doc) {
    const json root = parse_text(text, doc);
    SweepSpecFile spec;
    const std::string id = string_value(member(root, "parameter", doc), doc + ".parameter");
    auto parameter = sweep_parameter_from_id(id);
    if (!parameter)
        throw Error(doc + ".parameter: unknown sweep parameter '" + id + "'");
    spec.parameter = *parameter;
    const json& values = member(root, "values", doc);
    if (!values.is_array() || values.empty())
        throw Error(doc + ".values: expected a non-empty array");
    for (std::size_t i = 0; i < values.size(); ++i)
        spec.values.push_back(number(values[i], doc + ".values[" + std::to_string(i) + "]"));
    spec.reference_scenario =
        string_value(member(root, "reference_scenario", doc), doc + ".reference_scenario");
    return spec;
}

SweepSpecFile load_sweep_spec(const std::filesystem::path& path) {
    return parse_sweep_spec(read_file(path), path.filename().string());
}

BreakdownTable parse_breakdown_table(const std::string& text, const std::string& doc) {
    const json root = parse_text(text, doc);
    const json& labels_node = member(root, "labels", doc);
    if (!labels_node.is_array() || labels_node.empty())
        throw Error(doc + ".labels: expected a non-empty array");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < labels_node.size(); ++i)
        labels.push_back(string_value(labels_node[i], doc + ".labels[" + std::to_string(i) + "]"));

    // Categories listed under totals are the defined ones; partial tables
    // (e.g. climate-only industry reports) are legitimate inputs here.
    std::array<bool, kCategoryCount> defined{};
    std::array<double, kCategoryCount> totals{};
    const json& totals_node = member(root, "totals", doc);
    if (!totals_node.is_object())
        throw Error(doc + ".totals: expected an object");
    for (const auto& [key, value] : totals_node.items()) {
        auto cat = category_from_id(key);
        if (!cat)
            throw Error(doc + ".totals." + key + ": unknown impact category");
        totals[index_of(*cat)] = number(value, doc + ".totals." + key);
        defined[index_of(*cat)] = true;
    }

    const json& shares_node = member(root, "shares", doc);
    if (!shares_node.is_object())
        throw Error(doc + ".shares: expected an object");
    std::vector<std::array<double, kCategoryCount>> shares(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = shares_node.find(labels[i]);
        if (it == shares_node.end())
            throw Error(doc + ".shares." + labels[i] + ": missing");
        for (const auto& [key, value] : it->items()) {
            auto cat = category_from_id(key);
            if (!cat)
                throw Error(doc + ".shares." + labels[i] + "." + key + ": unknown impact category");
            if (!defined[index_of(*cat)])
                throw Error(doc + ".shares." + labels[i] + "." + key +
                            ": share given for a category without a total");
            shares[i][index_of(*cat)] = number(value, doc + ".shares." + labels[i] + "." + key);
        }
    }
    return BreakdownTable(std::move(labels), std::move(shares), defined, ImpactVector(totals));
}

BreakdownTable load_breakdown_table(const std::filesystem::path& path) {
    return parse_breakdown_table(read_file(path), path.filename().string());
}

std::map<std::string, std::string> parse_label_map(const std::string& text,
                                                   const std::string& doc) {
    const json root = parse_text(text, doc);
    if (!root.is_object())
        throw Error(doc + ": expected an object");
    std::map<std::string, std::string> map;
    for (const auto& [key, value] : root.items())
        map.emplace(key, string_value(value, doc + "." + key));
    return map;
}

std::map<std::string, std::string> load_label_map(const std::filesystem::path& path) {
    return parse_label_map(read_file(path), path.filename().string());
}

ElementalComposition parse_composition(const std::string& text, const std::string& doc) {
    const json root = parse_text(text, doc);
    const json& elements = member(root, "elements", doc);
    if (!elements.is_object())
        throw Error(doc + ".elements: expected an object");
    ElementalComposition comp;
    for (const auto& [symbol, node] : elements.items()) {
        const std::string where = doc + ".elements." + symbol;
        ElementEntry entry;
        entry.net_mass_g = number(member(node, "net_mass_g", where), where + ".net_mass_g");
        entry.price_per_kg = number(member(node, "price_per_kg", where), where + ".price_per_kg");
        if (entry.net_mass_g < 0.0)
            throw Error(where + ".net_mass_g: must be >= 0");
        if (!(entry.price_per_kg > 0.0))
            throw Error(where + ".price_per_kg: must be > 0");
        comp.elements.emplace(symbol, entry);
    }
    return comp;
}

ElementalComposition load_composition(const std::filesystem::path& path) {
    return parse_composition(read_file(path), path.filename().string());
}

LossModel parse_loss_model(const std::string& text, const std::string& doc) {
    const json root = parse_text(text, doc);
    const json& tiers_node = member(root, "tiers", doc);
    if (!tiers_node.is_array() || tiers_node.empty())
        throw Error(doc + ".tiers: expected a non-empty array");
    std::vector<LossTier> tiers;
    for (std::size_t i = 0; i < tiers_node.size(); ++i) {
        const std::string where = doc + ".tiers[" + std::to_string(i) + "]";
        LossTier tier;
        tier.price_threshold =
            number(member(tiers_node[i], "price_threshold", where), where + ".price_threshold");
        tier.loss_ratio = number(member(tiers_node[i], "loss_ratio", where), where + ".loss_ratio");
        tiers.push_back(tier);
    }
    try {
        return LossModel(std::move(tiers));
    } catch (const Error& e) {
        throw Error(doc + ": " + e.what());
    }
}

LossModel load_loss_model(const std::filesystem::path& path) {
    return parse_loss_model(read_file(path), path.filename().string());
}

ImpactVector parse_impact_map(const std::string& text, const std::string& doc) {
    const json root = parse_text(text, doc);
    return impact_vector(root, doc);
}

ImpactVector load_impact_map(const std::filesystem::path& path) {
    return parse_impact_map(read_file(path), path.filename().string());
}

} // namespace gpulca
