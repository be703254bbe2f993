#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gpulca/analysis.hpp"
#include "gpulca/error.hpp"
#include "gpulca/json_io.hpp"
#include "gpulca/report.hpp"

namespace {

using namespace gpulca;

ReportFormat parse_format(const std::string& id) {
    auto format = report_format_from_id(id);
    if (!format)
        throw Error("unknown format '" + id + "' (expected json, csv or md)");
    return *format;
}

/// Reports are written only after the whole computation succeeded, so a
/// failing run never leaves partial output behind.
void emit(const std::string& report, const std::string& out_path) {
    if (out_path.empty())
        std::cout << report;
    else
        write_file(out_path, report);
}

void emit_svg_if_requested(const std::string& svg_path, const BreakdownTable& table,
                           const std::string& title) {
    if (svg_path.empty())
        return;
    // cosmetic output; never alters the exit status of the computation
    try {
        write_file(svg_path, render_breakdown_svg(table, title));
    } catch (const std::exception& e) {
        std::cerr << "warning: svg emission failed: " << e.what() << "\n";
    }
}

struct TrainInputs {
    std::string fu_path, bom_path, factors_path, scenario_path;
    std::string normalize_path, sweep_path;
};

TrainReport run_train(const TrainInputs& in) {
    FunctionalUnitConfig fu = load_fu(in.fu_path);
    GpuProduct product = load_bom(in.bom_path);
    FactorSet factors = load_factors(in.factors_path);
    UsageScenario scenario = load_scenario(in.scenario_path);
    // the FU's location decides the grid; the scenario supplies the rest
    scenario.grid_id = fu.grid_id;

    TrainReport report;
    report.fu = fu;
    report.card = gpu_lifecycle(product, scenario, factors);
    report.active_hours = active_gpu_hours(scenario);
    report.per_active_hour = impact_per_active_hour(report.card.total, report.active_hours);
    report.cards = cards_required(fu, scenario);
    report.fu_mid = training_impacts(fu.gpu_hours.mid(), report.per_active_hour);
    if (fu.gpu_hours.is_range()) {
        report.fu_min = training_impacts(fu.gpu_hours.min, report.per_active_hour);
        report.fu_max = training_impacts(fu.gpu_hours.max, report.per_active_hour);
    }
    if (!in.normalize_path.empty())
        report.normalization = pb_normalize(report.fu_mid, load_pb(in.normalize_path));
    if (!in.sweep_path.empty()) {
        SweepSpecFile file = load_sweep_spec(in.sweep_path);
        SweepSpec spec{file.parameter, file.values, scenario};
        report.sweep = sensitivity_sweep(spec, fu, product, factors);
    }
    return report;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-criteria life-cycle assessment of AI accelerator hardware"};
    app.require_subcommand(1);

    std::string bom_path, factors_path, scenario_path, fu_path;
    std::string format_id = "json";
    std::string out_path, svg_path;

    auto add_shared = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_id, "Output format: json, csv or md")
            ->default_val("json");
        cmd->add_option("--out", out_path, "Write the report to this file instead of stdout");
    };

    // card: per-card stage breakdown
    auto* card = app.add_subcommand("card", "Cradle-to-grave impacts of one GPU card");
    card->add_option("--bom", bom_path, "BOM file")->required();
    card->add_option("--factors", factors_path, "Factor dataset file")->required();
    card->add_option("--scenario", scenario_path, "Usage scenario file")->required();
    card->add_option("--emit-svg", svg_path, "Also write a stacked-bar SVG of stage shares");
    add_shared(card);

    // train: FU-level report
    TrainInputs train_in;
    auto* train = app.add_subcommand("train", "Impacts of one model-training run");
    train->add_option("--fu", fu_path, "Functional-unit file")->required();
    train->add_option("--bom", bom_path, "BOM file")->required();
    train->add_option("--factors", factors_path, "Factor dataset file")->required();
    train->add_option("--scenario", scenario_path, "Usage scenario file")->required();
    train->add_option("--normalize", train_in.normalize_path,
                      "Planetary-boundary budget file; adds person-equivalents");
    train->add_option("--sweep", train_in.sweep_path,
                      "Sweep spec file; adds a sensitivity section");
    train->add_option("--emit-svg", svg_path, "Also write a stacked-bar SVG of stage shares");
    add_shared(train);

    // calibrate: targets -> factor dataset
    std::string targets_path, calibrate_out;
    auto* calibrate = app.add_subcommand("calibrate", "Solve a factor dataset from share targets");
    calibrate->add_option("--targets", targets_path, "Calibration targets file")->required();
    calibrate->add_option("--out", calibrate_out, "Output factor dataset path")->required();

    // compare: breakdown tables diff
    std::string a_path, b_path, map_path;
    auto* compare = app.add_subcommand("compare", "Percentage-point diff of two breakdown tables");
    compare->add_option("--a", a_path, "First breakdown table")->required();
    compare->add_option("--b", b_path, "Second breakdown table")->required();
    compare->add_option("--map", map_path, "Label pairing (a label -> b label)")->required();
    add_shared(compare);

    // normalize: impacts vector -> person equivalents
    std::string impacts_path, pb_path;
    auto* normalize = app.add_subcommand("normalize", "Planetary-boundary normalization");
    normalize->add_option("--impacts", impacts_path, "Impact vector file")->required();
    normalize->add_option("--pb", pb_path, "Planetary-boundary budget file")->required();
    add_shared(normalize);

    // sweep: standalone sensitivity analysis
    std::vector<std::string> spec_paths;
    bool grid_mode = false;
    auto* sweep = app.add_subcommand("sweep", "One-at-a-time sensitivity sweep");
    sweep->add_option("--spec", spec_paths, "Sweep spec file (repeat with --grid)")->required();
    sweep->add_option("--fu", fu_path, "Functional-unit file")->required();
    sweep->add_option("--bom", bom_path, "BOM file")->required();
    sweep->add_option("--factors", factors_path, "Factor dataset file")->required();
    sweep->add_option("--scenario", scenario_path, "Usage scenario file")->required();
    sweep->add_flag("--grid", grid_mode,
                    "Cross product of several sweep specs instead of one-at-a-time");
    add_shared(sweep);

    CLI11_PARSE(app, argc, argv);

    try {
        const ReportFormat format = parse_format(format_id);

        if (card->parsed()) {
            GpuProduct product = load_bom(bom_path);
            FactorSet factors = load_factors(factors_path);
            UsageScenario scenario = load_scenario(scenario_path);
            StageBreakdown breakdown = gpu_lifecycle(product, scenario, factors);
            emit(render_card_report(breakdown, format), out_path);
            emit_svg_if_requested(svg_path, breakdown.stage_shares(),
                                  "Impact contribution by life cycle stage");
        } else if (train->parsed()) {
            train_in.fu_path = fu_path;
            train_in.bom_path = bom_path;
            train_in.factors_path = factors_path;
            train_in.scenario_path = scenario_path;
            TrainReport report = run_train(train_in);
            emit(render_train_report(report, format), out_path);
            emit_svg_if_requested(svg_path, report.card.stage_shares(),
                                  report.fu.model_name + ": impact contribution by stage");
        } else if (calibrate->parsed()) {
            CalibrationTargets targets = load_targets(targets_path);
            FactorSet factors = calibrate_from_targets(targets);
            write_file(calibrate_out, serialize_factors(factors));
        } else if (compare->parsed()) {
            BreakdownTable a = load_breakdown_table(a_path);
            BreakdownTable b = load_breakdown_table(b_path);
            BreakdownDiff diff = compare_breakdowns(a, b, load_label_map(map_path));
            emit(render_compare(diff, format), out_path);
        } else if (normalize->parsed()) {
            ImpactVector impacts = load_impact_map(impacts_path);
            PbNormalization result = pb_normalize(impacts, load_pb(pb_path));
            emit(render_normalization(result, format), out_path);
        } else if (sweep->parsed()) {
            FunctionalUnitConfig fu = load_fu(fu_path);
            GpuProduct product = load_bom(bom_path);
            FactorSet factors = load_factors(factors_path);
            UsageScenario scenario = load_scenario(scenario_path);
            scenario.grid_id = fu.grid_id;
            std::vector<SweepSpec> specs;
            for (const auto& path : spec_paths) {
                SweepSpecFile file = load_sweep_spec(path);
                specs.push_back(SweepSpec{file.parameter, file.values, scenario});
            }
            if (grid_mode) {
                GridSweepResult result = grid_sweep(specs, fu, product, factors);
                emit(render_grid_sweep(result, format), out_path);
            } else {
                if (specs.size() != 1)
                    throw Error("sweep: exactly one --spec expected without --grid");
                SweepResult result = sensitivity_sweep(specs.front(), fu, product, factors);
                emit(render_sweep(result, format), out_path);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
