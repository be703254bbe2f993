#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "gpulca/analysis.hpp"
#include "gpulca/factors.hpp"
#include "gpulca/inventory.hpp"
#include "gpulca/lifecycle.hpp"

namespace gpulca {

/// Sweep file contents; the reference scenario is named, not inlined, and
/// resolved by the caller against the loaded scenario.
struct SweepSpecFile {
    SweepParameter parameter = SweepParameter::AvgPowerW;
    std::vector<double> values;
    std::string reference_scenario;
};

// Parsers take UTF-8 JSON text plus a document name used in diagnostics;
// load_* variants read the file first. All failures throw Error with a
// path into the document ("components[2].mass_kg: ...").

GpuProduct parse_bom(const std::string& text, const std::string& doc);
GpuProduct load_bom(const std::filesystem::path& path);

FactorSet parse_factors(const std::string& text, const std::string& doc);
FactorSet load_factors(const std::filesystem::path& path);

/// Deterministic serialization: categories in canonical order, components
/// and grids sorted by key, doubles emitted with round-trip fidelity.
/// parse_factors(serialize_factors(f)) reproduces f value-identically.
std::string serialize_factors(const FactorSet& f);

AdjustmentDeltas parse_deltas(const std::string& text, const std::string& doc);
AdjustmentDeltas load_deltas(const std::filesystem::path& path);

PBReference parse_pb(const std::string& text, const std::string& doc);
PBReference load_pb(const std::filesystem::path& path);

UsageScenario parse_scenario(const std::string& text, const std::string& doc);
UsageScenario load_scenario(const std::filesystem::path& path);

FunctionalUnitConfig parse_fu(const std::string& text, const std::string& doc);
FunctionalUnitConfig load_fu(const std::filesystem::path& path);

CalibrationTargets parse_targets(const std::string& text, const std::string& doc);
CalibrationTargets load_targets(const std::filesystem::path& path);

SweepSpecFile parse_sweep_spec(const std::string& text, const std::string& doc);
SweepSpecFile load_sweep_spec(const std::filesystem::path& path);

BreakdownTable parse_breakdown_table(const std::string& text, const std::string& doc);
BreakdownTable load_breakdown_table(const std::filesystem::path& path);

std::map<std::string, std::string> parse_label_map(const std::string& text,
                                                   const std::string& doc);
std::map<std::string, std::string> load_label_map(const std::filesystem::path& path);

ElementalComposition parse_composition(const std::string& text, const std::string& doc);
ElementalComposition load_composition(const std::filesystem::path& path);

LossModel parse_loss_model(const std::string& text, const std::string& doc);
LossModel load_loss_model(const std::filesystem::path& path);

/// A bare {"<category>": number} map covering all 16 categories.
ImpactVector parse_impact_map(const std::string& text, const std::string& doc);
ImpactVector load_impact_map(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

} // namespace gpulca
