#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "absim/run.hpp"

namespace absim {

/// Bundled reference datasets this toolkit is expected to reproduce.
enum class ReferenceTable {
    TableI,     // fixed-wing power and service times
    TableII,    // HAP power and harvest ratios
    TableIII,   // power-stream shares across all platforms
    TableV,     // rotary-wing network dimensioning case study
    Fig2Sweep,  // rotary-wing service-time sweep series
};

inline ReferenceTable parse_table_id(const std::string& id) {
    if (id == "I") return ReferenceTable::TableI;
    if (id == "II") return ReferenceTable::TableII;
    if (id == "III") return ReferenceTable::TableIII;
    if (id == "V") return ReferenceTable::TableV;
    if (id == "fig2-sweep") return ReferenceTable::Fig2Sweep;
    throw ValidationError("unknown table id '" + id + "' (known: I, II, III, V, fig2-sweep)");
}

struct ReproduceReport {
    std::vector<ReportRow> rows;
    int cells_checked = 0;
    int cells_failed = 0;

    bool ok() const { return cells_failed == 0; }
};

namespace detail {

/// Appends a computed-vs-reference row and keeps the pass/fail tally.
class Gate {
public:
    explicit Gate(ReproduceReport& report) : report_(&report) {}

    void relative(const std::string& scenario, const std::string& metric, double value,
                  const std::string& unit, double expected, double tol_frac) {
        const double delta = (value - expected) / expected;
        const bool pass = std::abs(delta) <= tol_frac;
        char note[160];
        std::snprintf(note, sizeof(note), "reference %s %s, tolerance %.3g%%: %s (delta %+.2f%%)",
                      format_double(expected).c_str(), unit.c_str(), 100.0 * tol_frac,
                      pass ? "pass" : "FAIL", 100.0 * delta);
        push(scenario, metric, value, unit, note, pass);
    }

    /// Absolute margin, e.g. percentage points.
    void absolute(const std::string& scenario, const std::string& metric, double value,
                  const std::string& unit, double expected, double margin) {
        const double delta = value - expected;
        const bool pass = std::abs(delta) <= margin;
        char note[160];
        std::snprintf(note, sizeof(note), "reference %s %s, margin %.3g: %s (delta %+.3f)",
                      format_double(expected).c_str(), unit.c_str(), margin,
                      pass ? "pass" : "FAIL", delta);
        push(scenario, metric, value, unit, note, pass);
    }

    void exact(const std::string& scenario, const std::string& metric, long long value,
               long long expected) {
        const bool pass = value == expected;
        char note[96];
        std::snprintf(note, sizeof(note), "reference %lld, exact: %s", expected,
                      pass ? "pass" : "FAIL");
        push(scenario, metric, static_cast<double>(value), "", note, pass);
    }

    void range(const std::string& scenario, const std::string& metric, double value,
               const std::string& unit, double lo, double hi) {
        const bool pass = value >= lo && value <= hi;
        char note[128];
        std::snprintf(note, sizeof(note), "reference range [%s, %s] %s: %s",
                      format_double(lo).c_str(), format_double(hi).c_str(), unit.c_str(),
                      pass ? "pass" : "FAIL");
        push(scenario, metric, value, unit, note, pass);
    }

    void info(const std::string& scenario, const std::string& metric, double value,
              const std::string& unit, const std::string& note = "computed (not gated)") {
        report_->rows.push_back(ReportRow::scalar(scenario, metric, value, unit, note));
    }

private:
    void push(const std::string& scenario, const std::string& metric, double value,
              const std::string& unit, const char* note, bool pass) {
        report_->rows.push_back(ReportRow::scalar(scenario, metric, value, unit, note));
        ++report_->cells_checked;
        if (!pass) ++report_->cells_failed;
    }

    ReproduceReport* report_;
};

struct PowerSplit {
    double without_bs_w = 0.0;
    double total_w = 0.0;

    double share_without() const { return 100.0 * without_bs_w / total_w; }
};

inline PowerSplit power_split(const ScenarioConfig& config) {
    PlatformSpec loaded = config.platform;
    loaded.mass.bs_kg = config.profile.mass_kg;
    loaded.mass.battery_kg = config.battery.mass_kg;
    loaded.mass.solar_panel_kg = panel_mass_kg(config.panel);
    PlatformSpec without = loaded;
    without.mass.bs_kg = 0.0;
    const double base = mechanical_power(without);
    const CombinedBsPower combined =
        combined_bs_power(loaded, config.profile, config.mode, config.payload_check());
    return PowerSplit{base, base + combined.total_w()};
}

/// Reference power-stream shares; panels stay off the rotary wings here.
inline ScenarioConfig table_config(const std::string& builtin, DeploymentMode mode) {
    ScenarioConfig config = builtin_scenario(builtin);
    config.mode = mode;
    config.panel.area_m2 =
        config.platform.is_rotary_wing() ? 0.0 : config.panel.area_m2;
    return config;
}

}  // namespace detail

inline ReproduceReport reproduce(ReferenceTable table, const MonteCarloControls& mc = {}) {
    ReproduceReport report;
    detail::Gate gate(report);

    switch (table) {
        case ReferenceTable::TableIII: {
            struct Case {
                const char* builtin;
                const char* label;
                DeploymentMode mode;
                double total_kw;
                double share_pct;
            };
            const std::vector<Case> cases = {
                {"rwd-pico", "rwd-pic", DeploymentMode::FullBs, 2.04, 74.0},
                {"rwd-micro", "rwd-mic", DeploymentMode::FullBs, 4.04, 37.0},
                {"fwd-5m", "fwd-mic-5m", DeploymentMode::FullBs, 1.15, 71.0},
                {"fwd-10m", "fwd-mic-10m", DeploymentMode::FullBs, 2.39, 91.0},
                {"hap-30m", "hap-mac-30m", DeploymentMode::FullBs, 1.78, 17.0},
                {"hap-60m", "hap-mac-60m", DeploymentMode::FullBs, 2.68, 45.0},
                {"hap-25m", "hap-split-25m", DeploymentMode::Split, 1.45, 24.0},
                {"hap-35m", "hap-split-35m", DeploymentMode::Split, 1.65, 33.0},
            };
            for (const auto& c : cases) {
                const auto split = detail::power_split(detail::table_config(c.builtin, c.mode));
                const std::string scenario = std::string("table-III/") + c.label;
                gate.relative(scenario, "total_power", split.total_w / 1000.0, "kW", c.total_kw,
                              0.01);
                gate.absolute(scenario, "share_without_bs", split.share_without(), "%",
                              c.share_pct, 1.0);
            }
            break;
        }

        case ReferenceTable::TableI: {
            struct Case {
                const char* builtin;
                double total_kw;
                double hours_enugu;
                double hours_york;
            };
            const std::vector<Case> cases = {
                {"fwd-5m", 1.15, 8.56, 1.28},
                {"fwd-10m", 2.39, 16.47, 2.47},
            };
            for (const auto& c : cases) {
                ScenarioConfig config = builtin_scenario(c.builtin);
                const auto split = detail::power_split(config);
                const std::string scenario = std::string("table-I/") + c.builtin;
                gate.relative(scenario, "total_power", split.total_w / 1000.0, "kW", c.total_kw,
                              0.02);
                for (const auto& [region, hours] :
                     {std::pair{defaults::enugu(), c.hours_enugu},
                      std::pair{defaults::york(), c.hours_york}}) {
                    const double psi =
                        harvest_ratio(config.platform, config.profile, config.mode, config.panel,
                                      region, config.payload_check());
                    const EnduranceResult endurance = classify_endurance(psi, split.total_w);
                    gate.relative(scenario, "service_time_" + region.name,
                                  endurance.service_time_h.value_or(
                                      std::numeric_limits<double>::infinity()),
                                  "h", hours, 0.04);
                }
            }
            break;
        }

        case ReferenceTable::TableII: {
            struct Case {
                const char* builtin;
                bool heavy;  // heavy payload HAPs fly a macro, full or split
                double full_kw, split_kw;
                double psi_full_enugu, psi_split_enugu, psi_full_york, psi_split_york;
            };
            const std::vector<Case> cases = {
                {"hap-30m", true, 1.78, 1.54, 7.72, 9.6, 1.15, 1.44},
                {"hap-60m", true, 2.68, 2.44, 21.0, 24.24, 3.15, 3.63},
                {"hap-25m", false, 0.0, 1.45, 0.0, 7.1, 0.0, 1.06},
                {"hap-35m", false, 0.0, 1.65, 0.0, 12.21, 0.0, 1.83},
            };
            for (const auto& c : cases) {
                const std::string scenario = std::string("table-II/") + c.builtin;
                ScenarioConfig config = builtin_scenario(c.builtin);
                const std::vector<DeploymentMode> modes =
                    c.heavy ? std::vector<DeploymentMode>{DeploymentMode::FullBs,
                                                          DeploymentMode::Split}
                            : std::vector<DeploymentMode>{DeploymentMode::Split};
                for (const DeploymentMode mode : modes) {
                    config.mode = mode;
                    const bool full = mode == DeploymentMode::FullBs;
                    const char* mode_tag = full ? "full" : "split";
                    const auto split = detail::power_split(config);
                    gate.relative(scenario, std::string("total_power_") + mode_tag,
                                  split.total_w / 1000.0, "kW", full ? c.full_kw : c.split_kw,
                                  0.02);
                    for (const Region& region : {defaults::enugu(), defaults::york()}) {
                        const double psi =
                            harvest_ratio(config.platform, config.profile, mode, config.panel,
                                          region, config.payload_check());
                        const double expected =
                            full ? (region.name == "enugu" ? c.psi_full_enugu : c.psi_full_york)
                                 : (region.name == "enugu" ? c.psi_split_enugu
                                                           : c.psi_split_york);
                        gate.relative(scenario,
                                      "harvest_ratio_" + std::string(mode_tag) + "_" + region.name,
                                      psi, "", expected, 0.05);
                        gate.range(scenario,
                                   "self_sustaining_" + std::string(mode_tag) + "_" + region.name,
                                   psi > 1.0 ? 1.0 : 0.0, "", 1.0, 1.0);
                    }
                }
            }
            break;
        }

        case ReferenceTable::TableV: {
            struct Case {
                const char* builtin;
                double radius_m;
                long long n_abs;
                long long backups_min, backups_max;
                long long total_min, total_max;
            };
            const std::vector<Case> cases = {
                {"rwd-pico", 251.0, 6, 7, 10, 42, 60},
                {"rwd-micro", 351.0, 3, 14, 17, 42, 51},
            };
            for (const auto& c : cases) {
                ScenarioConfig config = builtin_scenario(c.builtin);
                config.panel.area_m2 = 0.0;  // the case study flies without panels
                config.monte_carlo = mc;
                const std::string scenario = std::string("table-V/") + c.builtin;
                gate.info(scenario, "tx_power", config.profile.tx_power_w, "W");
                gate.info(scenario, "bs_mass", config.profile.mass_kg, "kg");
                const DimensioningReport dim = dimension(
                    config.platform, config.profile, config.battery_sweep->masses_kg,
                    *config.service_area, *config.charging, config.coverage->altitude_m,
                    config.coverage->environment, config.monte_carlo.search(),
                    config.payload_check());
                gate.relative(scenario, "coverage_radius", dim.coverage_radius_m, "m", c.radius_m,
                              0.02);
                gate.exact(scenario, "n_abs", dim.n_abs, c.n_abs);
                gate.exact(scenario, "backup_batteries_per_abs_min", dim.min_backup_per_abs(),
                           c.backups_min);
                gate.exact(scenario, "backup_batteries_per_abs_max", dim.max_backup_per_abs(),
                           c.backups_max);
                gate.exact(scenario, "total_backup_batteries_min", dim.min_total_batteries(),
                           c.total_min);
                gate.exact(scenario, "total_backup_batteries_max", dim.max_total_batteries(),
                           c.total_max);
            }
            break;
        }

        case ReferenceTable::Fig2Sweep: {
            for (const char* builtin : {"rwd-pico", "rwd-micro"}) {
                ScenarioConfig config = builtin_scenario(builtin);
                config.id = std::string("fig2-sweep/") + config.profile.name;
                config.coverage.reset();
                config.service_area.reset();
                config.charging.reset();
                double max_gain_min = 0.0;
                for (const double ed : config.battery_sweep->energy_densities_wh_kg) {
                    for (const double mass : config.battery_sweep->masses_kg) {
                        const auto with_panel = rwd_service_time(
                            config.platform, config.profile, BatterySpec{mass, ed},
                            defaults::gaas_panel(1.0), config.region, config.payload_check());
                        const auto bare = rwd_service_time(
                            config.platform, config.profile, BatterySpec{mass, ed},
                            defaults::gaas_panel(0.0), config.region, config.payload_check());
                        max_gain_min = std::max(
                            max_gain_min,
                            (*with_panel.service_time_h - *bare.service_time_h) * 60.0);
                    }
                }
                for (const ReportRow& row : run_scenario(config)) {
                    if (!row.series.empty() && row.metric == "service_time") {
                        report.rows.push_back(row);
                    }
                }
                if (config.profile.cls == BsClass::Pico) {
                    gate.range(config.id, "max_panel_gain", max_gain_min, "min", 2.0, 5.0);
                } else {
                    gate.range(config.id, "max_panel_gain", max_gain_min, "min", 0.0, 1.5);
                }
            }
            break;
        }
    }

    report.rows.push_back(ReportRow::scalar(
        "summary", "cells_checked", static_cast<double>(report.cells_checked), ""));
    report.rows.push_back(ReportRow::scalar(
        "summary", "cells_failed", static_cast<double>(report.cells_failed), "",
        report.ok() ? "all cells within tolerance" : "TOLERANCE FAILURES"));
    return report;
}

}  // namespace absim
