#include "gpulca/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace gpulca {

using nlohmann::ordered_json;

namespace {

// human-readable formats use 4 significant figures; JSON keeps full precision
std::string sig4(double v) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.4g", v);
    return buffer;
}

ordered_json vector_json(const ImpactVector& v) {
    ordered_json out = ordered_json::object();
    for (auto cat : all_categories())
        out[std::string(category_id(cat))] = v[cat];
    return out;
}

ordered_json shares_json(const BreakdownTable& table) {
    ordered_json out = ordered_json::object();
    for (const auto& label : table.labels()) {
        ordered_json row = ordered_json::object();
        for (auto cat : all_categories()) {
            auto share = table.share(label, cat);
            if (share)
                row[std::string(category_id(cat))] = *share;
            else
                row[std::string(category_id(cat))] = nullptr;
        }
        out[label] = row;
    }
    return out;
}

ordered_json units_json() {
    ordered_json units = ordered_json::object();
    for (auto cat : all_categories())
        units[std::string(category_id(cat))] = std::string(category_unit(cat));
    return units;
}

ordered_json normalization_json(const PbNormalization& n) {
    ordered_json out = ordered_json::object();
    for (auto cat : all_categories()) {
        const auto& persons = n.person_equivalents[index_of(cat)];
        if (persons)
            out[std::string(category_id(cat))] = *persons;
        else
            out[std::string(category_id(cat))] = nullptr; // land use: no PB factor
    }
    return out;
}

ordered_json sweep_json(const SweepResult& r) {
    ordered_json out = ordered_json::object();
    out["parameter"] = std::string(sweep_parameter_id(r.parameter));
    out["reference_value"] = r.reference_value;
    out["reference_impacts"] = vector_json(r.reference_impacts);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < r.settings.size(); ++i) {
        ordered_json row = ordered_json::object();
        row["value"] = r.settings[i];
        ordered_json percent = ordered_json::object();
        for (auto cat : all_categories())
            percent[std::string(category_id(cat))] = r.percent_of_reference[i][index_of(cat)];
        row["percent_of_reference"] = percent;
        rows.push_back(row);
    }
    out["settings"] = rows;
    return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string csv_stage_table(const StageBreakdown& b, const double scale) {
    std::ostringstream out;
    out << "category,unit,cradle-to-gate,distribution,use,end-of-life,total\n";
    for (auto cat : all_categories()) {
        out << category_id(cat) << ',' << category_unit(cat) << ','
            << b.cradle_to_gate.total[cat] * scale << ',' << b.distribution[cat] * scale << ','
            << b.use[cat] * scale << ',' << b.eol[cat] * scale << ',' << b.total[cat] * scale
            << '\n';
    }
    return out.str();
}

std::string md_stage_table(const StageBreakdown& b, const BreakdownTable& shares,
                           double scale) {
    std::ostringstream out;
    out << "| category | unit | cradle-to-gate | distribution | use | end-of-life | total |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (auto cat : all_categories()) {
        out << "| " << category_id(cat) << " | " << category_unit(cat) << " | "
            << sig4(b.cradle_to_gate.total[cat] * scale) << " | "
            << sig4(b.distribution[cat] * scale) << " | " << sig4(b.use[cat] * scale)
            << " | " << sig4(b.eol[cat] * scale) << " | " << sig4(b.total[cat] * scale)
            << " |\n";
    }
    out << "\nStage shares (% of category total):\n\n";
    out << "| category | cradle-to-gate | distribution | use | end-of-life |\n";
    out << "|---|---|---|---|---|\n";
    for (auto cat : all_categories()) {
        out << "| " << category_id(cat) << " |";
        for (const auto& label : StageBreakdown::stage_labels()) {
            auto share = shares.share(label, cat);
            out << ' ' << (share ? sig4(*share) : "n/a") << " |";
        }
        out << '\n';
    }
    return out.str();
}

} // namespace

std::optional<ReportFormat> report_format_from_id(std::string_view id) {
    if (id == "json") return ReportFormat::Json;
    if (id == "csv") return ReportFormat::Csv;
    if (id == "md") return ReportFormat::Markdown;
    return std::nullopt;
}

std::string render_card_report(const StageBreakdown& b, ReportFormat format) {
    const BreakdownTable stage_shares = b.stage_shares();
    switch (format) {
    case ReportFormat::Csv:
        return csv_stage_table(b, 1.0);
    case ReportFormat::Markdown:
        return md_stage_table(b, stage_shares, 1.0);
    case ReportFormat::Json:
        break;
    }
    ordered_json root = ordered_json::object();
    root["units"] = units_json();
    root["electricity_kwh"] = b.electricity_kwh;
    ordered_json stages = ordered_json::object();
    stages["cradle-to-gate"] = vector_json(b.cradle_to_gate.total);
    stages["distribution"] = vector_json(b.distribution);
    stages["use"] = vector_json(b.use);
    stages["end-of-life"] = vector_json(b.eol);
    root["stages"] = stages;
    root["total"] = vector_json(b.total);
    root["stage_shares"] = shares_json(stage_shares);
    ordered_json components = ordered_json::object();
    for (const auto& part : b.cradle_to_gate.parts)
        components[part.label] = vector_json(part.impacts);
    root["components"] = components;
    root["component_shares"] = shares_json(b.component_shares());
    return dump(root);
}

std::string render_train_report(const TrainReport& r, ReportFormat format) {
    const double hours_mid = r.fu.gpu_hours.mid();
    const double scale = r.active_hours > 0.0 ? hours_mid / r.active_hours : 0.0;
    if (format == ReportFormat::Csv) {
        std::ostringstream out;
        out << "category,unit,cradle-to-gate,distribution,use,end-of-life,total";
        if (r.fu_min && r.fu_max)
            out << ",total_min,total_max";
        out << '\n';
        for (auto cat : all_categories()) {
            const StageBreakdown& b = r.card;
            out << category_id(cat) << ',' << category_unit(cat) << ','
                << b.cradle_to_gate.total[cat] * scale << ',' << b.distribution[cat] * scale
                << ',' << b.use[cat] * scale << ',' << b.eol[cat] * scale << ','
                << r.fu_mid[cat];
            if (r.fu_min && r.fu_max)
                out << ',' << (*r.fu_min)[cat] << ',' << (*r.fu_max)[cat];
            out << '\n';
        }
        return out.str();
    }
    if (format == ReportFormat::Markdown) {
        std::ostringstream out;
        out << "# " << r.fu.model_name << " (" << sig4(hours_mid) << " GPU hours, "
            << r.fu.grid_id << ", " << r.fu.year << ")\n\n";
        out << "Cards required: " << sig4(r.cards) << "\n\n";
        if (r.fu_min && r.fu_max) {
            out << "| category | unit | min | mid | max |\n|---|---|---|---|---|\n";
            for (auto cat : all_categories())
                out << "| " << category_id(cat) << " | " << category_unit(cat) << " | "
                    << sig4((*r.fu_min)[cat]) << " | " << sig4(r.fu_mid[cat]) << " | "
                    << sig4((*r.fu_max)[cat]) << " |\n";
            out << '\n';
        }
        out << md_stage_table(r.card, r.card.stage_shares(), scale);
        if (r.normalization) {
            out << "\nPlanetary-boundary normalization (person-year equivalents):\n\n";
            out << "| category | persons |\n|---|---|\n";
            for (auto cat : all_categories()) {
                const auto& persons = r.normalization->person_equivalents[index_of(cat)];
                out << "| " << category_id(cat) << " | "
                    << (persons ? sig4(*persons) : "n/a") << " |\n";
            }
        }
        if (r.sweep)
            out << '\n' << render_sweep(*r.sweep, ReportFormat::Markdown);
        return out.str();
    }

    ordered_json root = ordered_json::object();
    root["model_name"] = r.fu.model_name;
    root["parameter_count"] = r.fu.parameter_count;
    root["grid_id"] = r.fu.grid_id;
    root["year"] = r.fu.year;
    if (r.fu.gpu_hours.is_range()) {
        ordered_json hours = ordered_json::object();
        hours["min"] = r.fu.gpu_hours.min;
        hours["mid"] = hours_mid;
        hours["max"] = r.fu.gpu_hours.max;
        root["gpu_hours"] = hours;
    } else {
        root["gpu_hours"] = hours_mid;
    }
    root["units"] = units_json();
    root["active_hours_per_card"] = r.active_hours;
    root["cards_required"] = r.cards;
    root["per_active_hour"] = vector_json(r.per_active_hour);
    ordered_json stages = ordered_json::object();
    stages["cradle-to-gate"] = vector_json(vec_scale(r.card.cradle_to_gate.total, scale));
    stages["distribution"] = vector_json(vec_scale(r.card.distribution, scale));
    stages["use"] = vector_json(vec_scale(r.card.use, scale));
    stages["end-of-life"] = vector_json(vec_scale(r.card.eol, scale));
    root["stages"] = stages;
    root["total"] = vector_json(r.fu_mid);
    if (r.fu_min && r.fu_max) {
        root["total_min"] = vector_json(*r.fu_min);
        root["total_max"] = vector_json(*r.fu_max);
    }
    root["stage_shares"] = shares_json(r.card.stage_shares());
    if (r.normalization)
        root["pb_normalization"] = normalization_json(*r.normalization);
    if (r.sweep)
        root["sweep"] = sweep_json(*r.sweep);
    return dump(root);
}

std::string render_normalization(const PbNormalization& n, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::ostringstream out;
        out << "category,person_equivalents\n";
        for (auto cat : all_categories()) {
            const auto& persons = n.person_equivalents[index_of(cat)];
            out << category_id(cat) << ',';
            if (persons)
                out << *persons;
            out << '\n';
        }
        return out.str();
    }
    if (format == ReportFormat::Markdown) {
        std::ostringstream out;
        out << "| category | persons |\n|---|---|\n";
        for (auto cat : all_categories()) {
            const auto& persons = n.person_equivalents[index_of(cat)];
            out << "| " << category_id(cat) << " | " << (persons ? sig4(*persons) : "n/a")
                << " |\n";
        }
        return out.str();
    }
    ordered_json root = ordered_json::object();
    root["person_equivalents"] = normalization_json(n);
    return dump(root);
}

std::string render_sweep(const SweepResult& r, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::ostringstream out;
        out << "category,unit";
        for (double v : r.settings)
            out << ',' << std::string(sweep_parameter_id(r.parameter)) << '=' << v;
        out << '\n';
        for (auto cat : all_categories()) {
            out << category_id(cat) << ',' << category_unit(cat);
            for (std::size_t i = 0; i < r.settings.size(); ++i)
                out << ',' << r.percent_of_reference[i][index_of(cat)];
            out << '\n';
        }
        return out.str();
    }
    if (format == ReportFormat::Markdown) {
        std::ostringstream out;
        out << "Sensitivity: " << sweep_parameter_id(r.parameter)
            << " (reference " << sig4(r.reference_value) << " = 100%)\n\n";
        out << "| category |";
        for (double v : r.settings)
            out << ' ' << sig4(v) << " |";
        out << "\n|---|";
        for (std::size_t i = 0; i < r.settings.size(); ++i)
            out << "---|";
        out << '\n';
        for (auto cat : all_categories()) {
            out << "| " << category_id(cat) << " |";
            for (std::size_t i = 0; i < r.settings.size(); ++i)
                out << ' ' << sig4(r.percent_of_reference[i][index_of(cat)]) << " |";
            out << '\n';
        }
        return out.str();
    }
    return dump(sweep_json(r));
}

std::string render_grid_sweep(const GridSweepResult& r, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::ostringstream out;
        for (auto parameter : r.parameters)
            out << sweep_parameter_id(parameter) << ',';
        out << "category,percent_of_reference\n";
        for (std::size_t row = 0; row < r.settings.size(); ++row) {
            for (auto cat : all_categories()) {
                for (double v : r.settings[row])
                    out << v << ',';
                out << category_id(cat) << ',' << r.percent_of_reference[row][index_of(cat)]
                    << '\n';
            }
        }
        return out.str();
    }
    if (format == ReportFormat::Markdown) {
        std::ostringstream out;
        out << "Factorial sweep (reference = 100%):\n\n|";
        for (auto parameter : r.parameters)
            out << ' ' << sweep_parameter_id(parameter) << " |";
        for (auto cat : all_categories())
            out << ' ' << category_id(cat) << " |";
        out << "\n|";
        for (std::size_t i = 0; i < r.parameters.size() + kCategoryCount; ++i)
            out << "---|";
        out << '\n';
        for (std::size_t row = 0; row < r.settings.size(); ++row) {
            out << '|';
            for (double v : r.settings[row])
                out << ' ' << sig4(v) << " |";
            for (auto cat : all_categories())
                out << ' ' << sig4(r.percent_of_reference[row][index_of(cat)]) << " |";
            out << '\n';
        }
        return out.str();
    }
    ordered_json root = ordered_json::object();
    ordered_json parameters = ordered_json::array();
    for (auto parameter : r.parameters)
        parameters.push_back(std::string(sweep_parameter_id(parameter)));
    root["parameters"] = parameters;
    root["reference_impacts"] = vector_json(r.reference_impacts);
    ordered_json rows = ordered_json::array();
    for (std::size_t row = 0; row < r.settings.size(); ++row) {
        ordered_json entry = ordered_json::object();
        ordered_json values = ordered_json::object();
        for (std::size_t i = 0; i < r.parameters.size(); ++i)
            values[std::string(sweep_parameter_id(r.parameters[i]))] = r.settings[row][i];
        entry["values"] = values;
        ordered_json percent = ordered_json::object();
        for (auto cat : all_categories())
            percent[std::string(category_id(cat))] = r.percent_of_reference[row][index_of(cat)];
        entry["percent_of_reference"] = percent;
        rows.push_back(entry);
    }
    root["settings"] = rows;
    return dump(root);
}

std::string render_compare(const BreakdownDiff& d, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::ostringstream out;
        out << "label,category,diff_points\n";
        for (std::size_t i = 0; i < d.labels.size(); ++i) {
            for (auto cat : all_categories()) {
                const auto& diff = d.diff_points[i][index_of(cat)];
                if (!diff)
                    continue;
                out << d.labels[i] << ',' << category_id(cat) << ',' << *diff << '\n';
            }
        }
        return out.str();
    }
    if (format == ReportFormat::Markdown) {
        std::ostringstream out;
        out << "| label | category | diff (pts) |\n|---|---|---|\n";
        for (std::size_t i = 0; i < d.labels.size(); ++i)
            for (auto cat : all_categories()) {
                const auto& diff = d.diff_points[i][index_of(cat)];
                if (diff)
                    out << "| " << d.labels[i] << " | " << category_id(cat) << " | "
                        << sig4(*diff) << " |\n";
            }
        return out.str();
    }
    ordered_json root = ordered_json::object();
    for (std::size_t i = 0; i < d.labels.size(); ++i) {
        ordered_json row = ordered_json::object();
        for (auto cat : all_categories()) {
            const auto& diff = d.diff_points[i][index_of(cat)];
            if (diff)
                row[std::string(category_id(cat))] = *diff;
            else
                row[std::string(category_id(cat))] = nullptr;
        }
        root[d.labels[i]] = row;
    }
    return dump(root);
}

} // namespace gpulca
