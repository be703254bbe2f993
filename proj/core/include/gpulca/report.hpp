#pragma once

#include <optional>
#include <string>

#include "gpulca/analysis.hpp"
#include "gpulca/lifecycle.hpp"

namespace gpulca {

enum class ReportFormat { Json, Csv, Markdown };

std::optional<ReportFormat> report_format_from_id(std::string_view id);

/// Per-card report: absolute stage totals plus percentage shares per
/// category (undefined shares emitted as null / empty cells).
std::string render_card_report(const StageBreakdown& b, ReportFormat format);

/// FU-level report. When the FU carries a GPU-hours range the report has
/// min/mid/max columns; optional PB normalization and sweep sections are
/// appended when present.
struct TrainReport {
    FunctionalUnitConfig fu;
    StageBreakdown card;
    ImpactVector per_active_hour;
    double active_hours = 0.0;
    double cards = 0.0;
    ImpactVector fu_mid;
    std::optional<ImpactVector> fu_min;
    std::optional<ImpactVector> fu_max;
    std::optional<PbNormalization> normalization;
    std::optional<SweepResult> sweep;
};

std::string render_train_report(const TrainReport& r, ReportFormat format);

std::string render_normalization(const PbNormalization& n, ReportFormat format);

std::string render_sweep(const SweepResult& r, ReportFormat format);

std::string render_grid_sweep(const GridSweepResult& r, ReportFormat format);

std::string render_compare(const BreakdownDiff& d, ReportFormat format);

/// Stacked-bar chart (one bar per category, one segment per part) of a
/// breakdown table. Purely cosmetic output; callers must not let failures
/// here affect computation exit status.
std::string render_breakdown_svg(const BreakdownTable& table, const std::string& title);

} // namespace gpulca
