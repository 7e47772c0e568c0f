// absim: power, endurance, coverage and dimensioning for aerial base
// stations, driven by declarative scenario files.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "absim/absim.hpp"

namespace {

namespace fs = std::filesystem;

struct CommonOptions {
    std::string scenario_path;
    std::string format = "pretty-table";
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    bool quiet = false;
};

void add_output_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format: pretty-table, csv, plot-data")
        ->default_val("pretty-table");
    cmd->add_option("--out", opts.out_dir, "Directory to write output files into");
    cmd->add_option("--seed", opts.seed, "Monte Carlo seed override");
    cmd->add_option("--samples", opts.samples, "Monte Carlo samples-per-radius override");
    cmd->add_flag("--quiet", opts.quiet, "Suppress the defaults ledger echo on stderr");
}

void add_scenario_option(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--scenario", opts.scenario_path, "Scenario file to run")
        ->required();
}

absim::ScenarioConfig load(const CommonOptions& opts) {
    absim::ScenarioConfig config =
        absim::load_scenario(opts.scenario_path, opts.quiet ? nullptr : &std::cerr);
    if (opts.seed) config.monte_carlo.seed = *opts.seed;
    if (opts.samples) config.monte_carlo.samples = *opts.samples;
    return config;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw absim::ValidationError("cannot write " + path.string());
    out << content;
}

/// Emits rows in the requested format: to stdout, or into --out when given.
/// plot-data always needs --out (it produces one file per series).
void emit_rows(const std::vector<absim::ReportRow>& rows, const CommonOptions& opts,
               const std::string& stem) {
    const absim::ReportFormat format = absim::parse_report_format(opts.format);
    if (format == absim::ReportFormat::PlotData) {
        if (opts.out_dir.empty()) {
            throw absim::ValidationError("--format plot-data needs --out <dir>");
        }
        fs::create_directories(opts.out_dir);
        for (const auto& [name, content] : absim::to_plot_series(rows)) {
            write_file(fs::path(opts.out_dir) / name, content);
        }
        return;
    }
    const std::string content =
        format == absim::ReportFormat::Csv ? absim::to_csv(rows) : absim::to_pretty_table(rows);
    if (opts.out_dir.empty()) {
        std::cout << content;
        return;
    }
    fs::create_directories(opts.out_dir);
    const char* extension = format == absim::ReportFormat::Csv ? ".csv" : ".txt";
    write_file(fs::path(opts.out_dir) / (stem + extension), content);
}

std::vector<absim::ReportRow> filter_metrics(const std::vector<absim::ReportRow>& rows,
                                             const std::set<std::string>& wanted) {
    std::vector<absim::ReportRow> out;
    for (const auto& row : rows) {
        if (wanted.count(row.metric)) out.push_back(row);
    }
    return out;
}

const std::set<std::string> kPowerMetrics = {
    "feasibility",      "mechanical_power_without_bs", "bs_excess_mechanical_power",
    "bs_comm_power",    "total_power",                 "share_without_bs",
    "share_combined_bs", "backhaul_power_if_enabled",  "power_without_bs",
    "power_bs_excess",  "power_bs_comm"};

const std::set<std::string> kEnduranceMetrics = {
    "panel_area",      "panel_mass",    "daily_harvested_energy",
    "harvested_power", "harvest_ratio", "robustness_margin",
    "service_time",    "service_time_indefinite"};

const std::set<std::string> kCoverageMetrics = {"coverage_radius", "outage_at_radius",
                                                "monte_carlo_samples", "monte_carlo_seed"};

const std::set<std::string> kDimensionMetrics = {
    "coverage_radius",
    "outage_at_radius",
    "n_abs",
    "backup_batteries_per_abs",
    "backup_batteries_per_abs_min",
    "backup_batteries_per_abs_max",
    "total_backup_batteries_min",
    "total_backup_batteries_max",
    "total_battery_mass_min",
    "total_battery_mass_max"};

std::set<std::string> merge(const std::set<std::string>& a, const std::set<std::string>& b) {
    std::set<std::string> out = a;
    out.insert(b.begin(), b.end());
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"aerial base station power, endurance, coverage and dimensioning toolkit"};
    app.require_subcommand(1);

    CommonOptions power_opts, endurance_opts, coverage_opts, dimension_opts, emit_opts,
        reproduce_opts;
    std::string table_id;

    CLI::App* power = app.add_subcommand("power", "Power consumption split for a scenario");
    add_scenario_option(power, power_opts);
    add_output_options(power, power_opts);

    CLI::App* endurance =
        app.add_subcommand("endurance", "Harvest ratio and service time for a scenario");
    add_scenario_option(endurance, endurance_opts);
    add_output_options(endurance, endurance_opts);

    CLI::App* coverage =
        app.add_subcommand("coverage", "Monte Carlo coverage radius for a scenario");
    add_scenario_option(coverage, coverage_opts);
    add_output_options(coverage, coverage_opts);

    CLI::App* dimension =
        app.add_subcommand("dimension", "Fleet and backup-battery dimensioning for a scenario");
    add_scenario_option(dimension, dimension_opts);
    add_output_options(dimension, dimension_opts);

    CLI::App* emit = app.add_subcommand("emit", "Run the full pipeline and emit every row");
    add_scenario_option(emit, emit_opts);
    add_output_options(emit, emit_opts);

    CLI::App* reproduce_cmd = app.add_subcommand(
        "reproduce", "Reproduce a bundled reference table and diff against its values");
    reproduce_cmd->add_option("table", table_id, "One of: I, II, III, V, fig2-sweep")->required();
    add_output_options(reproduce_cmd, reproduce_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (power->parsed()) {
            const auto rows = absim::run_scenario(load(power_opts));
            emit_rows(filter_metrics(rows, kPowerMetrics), power_opts, "power");
        } else if (endurance->parsed()) {
            const auto rows = absim::run_scenario(load(endurance_opts));
            emit_rows(filter_metrics(rows, merge(kPowerMetrics, kEnduranceMetrics)),
                      endurance_opts, "endurance");
        } else if (coverage->parsed()) {
            const absim::ScenarioConfig config = load(coverage_opts);
            if (!config.coverage) {
                throw absim::ValidationError("scenario '" + config.id +
                                             "' has no coverage section");
            }
            const auto rows = absim::run_scenario(config);
            emit_rows(filter_metrics(rows, kCoverageMetrics), coverage_opts, "coverage");
        } else if (dimension->parsed()) {
            const absim::ScenarioConfig config = load(dimension_opts);
            if (!config.coverage || !config.service_area || !config.charging) {
                throw absim::ValidationError(
                    "scenario '" + config.id +
                    "' needs coverage, service_area and charging_station sections");
            }
            const auto rows = absim::run_scenario(config);
            emit_rows(filter_metrics(rows, kDimensionMetrics), dimension_opts, "dimension");
        } else if (emit->parsed()) {
            const auto rows = absim::run_scenario(load(emit_opts));
            emit_rows(rows, emit_opts, "report");
        } else if (reproduce_cmd->parsed()) {
            absim::MonteCarloControls mc;
            if (reproduce_opts.seed) mc.seed = *reproduce_opts.seed;
            if (reproduce_opts.samples) mc.samples = *reproduce_opts.samples;
            const absim::ReproduceReport report =
                absim::reproduce(absim::parse_table_id(table_id), mc);
            emit_rows(report.rows, reproduce_opts, "table-" + table_id);
            if (!report.ok()) {
                std::cerr << report.cells_failed << " of " << report.cells_checked
                          << " cells outside tolerance\n";
                return 1;
            }
        }
    } catch (const absim::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const absim::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const absim::FeasibilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
