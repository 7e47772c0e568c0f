#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "absim/errors.hpp"

namespace absim {

/// One reported quantity. Sweep points additionally carry a series id and
/// an abscissa so plot-ready files can be grouped out of a flat row list.
struct ReportRow {
    std::string scenario;
    std::string metric;
    double value = 0.0;
    std::string unit;
    std::string series;
    double x = std::numeric_limits<double>::quiet_NaN();
    std::string x_unit;
    std::string note;

    bool has_x() const { return !std::isnan(x); }

    static ReportRow scalar(std::string scenario, std::string metric, double value,
                            std::string unit, std::string note = "") {
        ReportRow row;
        row.scenario = std::move(scenario);
        row.metric = std::move(metric);
        row.value = value;
        row.unit = std::move(unit);
        row.note = std::move(note);
        return row;
    }

    static ReportRow sweep(std::string scenario, std::string metric, double value,
                           std::string unit, std::string series, double x, std::string x_unit,
                           std::string note = "") {
        ReportRow row = scalar(std::move(scenario), std::move(metric), value, std::move(unit),
                               std::move(note));
        row.series = std::move(series);
        row.x = x;
        row.x_unit = std::move(x_unit);
        return row;
    }
};

enum class ReportFormat { PrettyTable, Csv, PlotData };

inline ReportFormat parse_report_format(const std::string& name) {
    if (name == "pretty-table") return ReportFormat::PrettyTable;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "plot-data") return ReportFormat::PlotData;
    throw ValidationError("unknown format '" + name +
                          "' (known: pretty-table, csv, plot-data)");
}

inline std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.10g", value);
    return buffer;
}

namespace detail {

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

/// UTF-8, comma separated, header row, '.' decimal separator.
inline std::string to_csv(const std::vector<ReportRow>& rows) {
    if (rows.empty()) throw ValidationError("no rows to emit");
    std::string out = "scenario,metric,value,unit,series,x,x_unit,note\n";
    for (const auto& row : rows) {
        out += detail::csv_escape(row.scenario) + ',';
        out += detail::csv_escape(row.metric) + ',';
        out += format_double(row.value) + ',';
        out += detail::csv_escape(row.unit) + ',';
        out += detail::csv_escape(row.series) + ',';
        out += (row.has_x() ? format_double(row.x) : std::string{}) + ',';
        out += detail::csv_escape(row.x_unit) + ',';
        out += detail::csv_escape(row.note) + '\n';
    }
    return out;
}

inline std::string to_pretty_table(const std::vector<ReportRow>& rows) {
    if (rows.empty()) throw ValidationError("no rows to emit");
    std::size_t w_scenario = 8, w_metric = 6, w_value = 5, w_unit = 4;
    std::vector<std::string> values;
    values.reserve(rows.size());
    for (const auto& row : rows) {
        std::string value = format_double(row.value);
        if (row.has_x()) value += " @ " + format_double(row.x) + " " + row.x_unit;
        values.push_back(value);
        w_scenario = std::max(w_scenario, row.scenario.size());
        w_metric = std::max(w_metric, row.metric.size());
        w_value = std::max(w_value, values.back().size());
        w_unit = std::max(w_unit, row.unit.size());
    }
    auto pad = [](const std::string& s, std::size_t width) {
        return s + std::string(width - s.size(), ' ');
    };
    std::string out = pad("scenario", w_scenario) + "  " + pad("metric", w_metric) + "  " +
                      pad("value", w_value) + "  " + pad("unit", w_unit) + "  note\n";
    out += std::string(out.size(), '-') + "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out += pad(rows[i].scenario, w_scenario) + "  " + pad(rows[i].metric, w_metric) + "  " +
               pad(values[i], w_value) + "  " + pad(rows[i].unit, w_unit) + "  " + rows[i].note +
               "\n";
    }
    return out;
}

namespace detail {

inline std::string sanitize_filename(std::string name) {
    for (char& c : name) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.')) {
            c = '_';
        }
    }
    return name;
}

}  // namespace detail

/// One x/y series file per (scenario, series, metric) group of sweep rows.
/// Rows without an abscissa are skipped; keys are sanitized file names.
inline std::map<std::string, std::string> to_plot_series(const std::vector<ReportRow>& rows) {
    if (rows.empty()) throw ValidationError("no rows to emit");
    std::map<std::string, std::vector<const ReportRow*>> groups;
    for (const auto& row : rows) {
        if (!row.has_x()) continue;
        groups[row.scenario + "__" + row.series + "__" + row.metric].push_back(&row);
    }
    if (groups.empty()) {
        throw ValidationError("no sweep rows to plot; plot-data needs swept scenarios");
    }
    std::map<std::string, std::string> files;
    for (auto& [key, members] : groups) {
        std::stable_sort(members.begin(), members.end(),
                         [](const ReportRow* a, const ReportRow* b) { return a->x < b->x; });
        std::string content = members.front()->x_unit + "," + members.front()->metric + "_" +
                              members.front()->unit + "\n";
        for (const ReportRow* row : members) {
            content += format_double(row->x) + "," + format_double(row->value) + "\n";
        }
        files[detail::sanitize_filename(key) + ".csv"] = content;
    }
    return files;
}

}  // namespace absim
