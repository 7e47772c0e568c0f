#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "absim/absim.hpp"

using namespace absim;
namespace fs = std::filesystem;

namespace {

fs::path scenario_dir() { return fs::path(ABSIM_SCENARIO_DIR); }

const ReportRow& find_row(const std::vector<ReportRow>& rows, const std::string& metric) {
    for (const auto& row : rows) {
        if (row.metric == metric && row.series.empty()) return row;
    }
    FAIL("no row with metric " + metric);
    static ReportRow sentinel;
    return sentinel;
}

// minimal RFC-4180 style parser for the round-trip check
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            record.push_back(field);
            field.clear();
        } else if (c == '\n') {
            record.push_back(field);
            field.clear();
            records.push_back(record);
            record.clear();
        } else {
            field += c;
        }
    }
    return records;
}

}  // namespace

TEST_CASE("every bundled scenario loads and validates", "[scenario]") {
    int count = 0;
    for (const auto& entry : fs::directory_iterator(scenario_dir())) {
        if (entry.path().extension() != ".scenario") continue;
        ++count;
        CHECK_NOTHROW(load_scenario(entry.path()));
    }
    CHECK(count == 8);
}

TEST_CASE("bundled rwd-pico matches the built-in defaults", "[scenario]") {
    const ScenarioConfig file = load_scenario(scenario_dir() / "rwd-pico.scenario");
    const ScenarioConfig builtin = builtin_scenario("rwd-pico");
    CHECK(file.id == builtin.id);
    CHECK(file.platform.name == builtin.platform.name);
    CHECK(file.platform.mass.structural_kg == builtin.platform.mass.structural_kg);
    CHECK(file.profile.name == builtin.profile.name);
    CHECK(file.battery.mass_kg == builtin.battery.mass_kg);
    REQUIRE(file.battery_sweep.has_value());
    CHECK(file.battery_sweep->masses_kg == builtin.battery_sweep->masses_kg);
    CHECK(file.panel_area_sweep_m2 == builtin.panel_area_sweep_m2);
    REQUIRE(file.coverage.has_value());
    CHECK(file.coverage->altitude_m == builtin.coverage->altitude_m);
    CHECK(file.monte_carlo.seed == 42);
    CHECK(file.monte_carlo.samples == 10000);
}

TEST_CASE("platform-appropriate panel defaults are applied", "[scenario]") {
    const ScenarioConfig fwd5 = load_scenario(scenario_dir() / "fwd-5m.scenario");
    CHECK(fwd5.panel.area_m2 == Catch::Approx(25.0 / 9.5));
    CHECK(fwd5.waive_payload_check);

    const ScenarioConfig hap30 = load_scenario(scenario_dir() / "hap-30m.scenario");
    CHECK(hap30.panel.area_m2 == Catch::Approx(defaults::kHapPanelArea30m));

    const ScenarioConfig pico = load_scenario(scenario_dir() / "rwd-pico.scenario");
    CHECK(pico.panel.area_m2 == 0.0);
}

TEST_CASE("omitted seed falls back to the documented default", "[scenario]") {
    const nlohmann::json minimal = {{"id", "bare"},
                                    {"platform", "rwd"},
                                    {"bs_profile", "pico"},
                                    {"battery", {{"mass_kg", 5.0}}}};
    const ScenarioConfig config = parse_scenario(minimal, "bare");
    CHECK(config.monte_carlo.seed == 42);
    CHECK(config.monte_carlo.samples == 10000);
    CHECK(config.monte_carlo.reliability == 0.99);
    CHECK(config.region.name == "enugu");
}

TEST_CASE("negative battery mass is rejected by name", "[scenario]") {
    const nlohmann::json bad = {{"id", "bad"},
                                {"platform", "rwd"},
                                {"bs_profile", "pico"},
                                {"battery", {{"mass_kg", -1.0}}}};
    try {
        parse_scenario(bad, "bad");
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("battery.mass") != std::string::npos);
    }
}

TEST_CASE("validation reports every violation, not just the first", "[scenario]") {
    const nlohmann::json bad = {{"id", "bad"},
                                {"platform", "rwd"},
                                {"bs_profile", "pico"},
                                {"battery", {{"mass_g", 5.0}}},  // wrong unit suffix
                                {"solar_panel", {{"area_m2", -2.0}}},
                                {"mystery_key", 1}};
    try {
        parse_scenario(bad, "bad");
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(e.violations().size() >= 3);
        const std::string all = e.what();
        CHECK(all.find("mass_g") != std::string::npos);          // unknown key named
        CHECK(all.find("mass_kg") != std::string::npos);         // missing key named
        CHECK(all.find("mystery_key") != std::string::npos);
        CHECK(all.find("area_m2") != std::string::npos);
    }
}

TEST_CASE("missing and malformed files fail with context", "[scenario]") {
    CHECK_THROWS_AS(load_scenario(scenario_dir() / "nope.scenario"), ValidationError);
    const fs::path bad = fs::temp_directory_path() / "absim_bad.scenario";
    std::ofstream(bad) << "{ not json";
    try {
        load_scenario(bad);
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("absim_bad.scenario") != std::string::npos);
    }
}

TEST_CASE("loading echoes the back-solved defaults into the run log", "[scenario]") {
    std::ostringstream log;
    load_scenario(scenario_dir() / "hap-60m.scenario", &log);
    const std::string text = log.str();
    CHECK(text.find("back-solved defaults in effect") != std::string::npos);
    for (const auto& entry : defaults::provenance_ledger()) {
        CHECK(text.find(entry.name) != std::string::npos);
    }
}

TEST_CASE("shipped ledger file matches the compiled constants", "[scenario]") {
    std::ifstream in(scenario_dir() / "ledger.json");
    REQUIRE(in.good());
    const nlohmann::json ledger = nlohmann::json::parse(in);
    const auto& compiled = defaults::provenance_ledger();
    REQUIRE(ledger.at("entries").size() == compiled.size());
    for (std::size_t i = 0; i < compiled.size(); ++i) {
        const auto& entry = ledger.at("entries").at(i);
        CHECK(entry.at("name").get<std::string>() == compiled[i].name);
        CHECK(entry.at("value").get<double>() == Catch::Approx(compiled[i].value));
        CHECK(entry.at("unit").get<std::string>() == compiled[i].unit);
        CHECK(entry.at("derivation").get<std::string>() == compiled[i].derivation);
    }
}

TEST_CASE("running a scenario reproduces the deployment total", "[scenario]") {
    ScenarioConfig config = builtin_scenario("rwd-pico");
    config.coverage.reset();  // keep this test cheap; coverage has its own tests
    config.service_area.reset();
    config.charging.reset();
    config.battery_sweep.reset();
    config.panel_area_sweep_m2.reset();
    const auto rows = run_scenario(config);
    CHECK(find_row(rows, "total_power").value == Catch::Approx(2040.03).epsilon(1e-4));
    CHECK(find_row(rows, "feasibility").value == 2.0);
    CHECK(find_row(rows, "service_time").value == Catch::Approx(0.8578305778769328));

    const auto hap = run_scenario(builtin_scenario("hap-60m"));
    CHECK(find_row(hap, "total_power").value == Catch::Approx(2682.1437).epsilon(1e-6));
    CHECK(find_row(hap, "harvest_ratio").value == Catch::Approx(21.0).epsilon(0.05));
    CHECK(find_row(hap, "service_time_indefinite").value == 1.0);

    const auto fwd = run_scenario(builtin_scenario("fwd-10m"));
    CHECK(find_row(fwd, "service_time").value == Catch::Approx(16.47).epsilon(0.04));
}

TEST_CASE("scenario runs are deterministic byte for byte", "[scenario]") {
    ScenarioConfig config = builtin_scenario("rwd-micro");
    config.battery_sweep.reset();
    config.panel_area_sweep_m2.reset();
    const std::string a = to_csv(run_scenario(config));
    const std::string b = to_csv(run_scenario(config));
    CHECK(a == b);
    CHECK(a.find("scenario,metric,value,unit,series,x,x_unit,note\n") == 0);
}

TEST_CASE("infeasible deployments fail loudly unless waived", "[scenario]") {
    ScenarioConfig config = builtin_scenario("hap-25m");
    config.profile = defaults::macro();
    CHECK_THROWS_AS(run_scenario(config), FeasibilityError);
    config.waive_payload_check = true;
    CHECK_NOTHROW(run_scenario(config));
}

TEST_CASE("fig2 sweep emits 18 series", "[scenario]") {
    const ReproduceReport report = reproduce(ReferenceTable::Fig2Sweep);
    CHECK(report.ok());
    const auto series = to_plot_series(report.rows);
    CHECK(series.size() == 18);  // 2 BS classes x 3 energy densities x 3 panel areas
    for (const auto& [name, content] : series) {
        const auto records = parse_csv(content);
        REQUIRE(records.size() == 6);  // header + 5 battery masses
        CHECK(records[0][0] == "takeoff_mass_kg");
    }
}

TEST_CASE("csv output round-trips through a generic parser", "[scenario]") {
    ScenarioConfig config = builtin_scenario("hap-35m");
    const auto rows = run_scenario(config);
    const std::string csv = to_csv(rows);
    const auto records = parse_csv(csv);
    REQUIRE(records.size() == rows.size() + 1);
    REQUIRE(records[0].size() == 8);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& record = records[i + 1];
        REQUIRE(record.size() == 8);
        CHECK(record[0] == rows[i].scenario);
        CHECK(record[1] == rows[i].metric);
        CHECK(record[2] == format_double(rows[i].value));
        CHECK(record[7] == rows[i].note);
    }
}

TEST_CASE("emitting zero rows is an error", "[scenario]") {
    CHECK_THROWS_AS(to_csv({}), ValidationError);
    CHECK_THROWS_AS(to_pretty_table({}), ValidationError);
    CHECK_THROWS_AS(to_plot_series({}), ValidationError);
}

TEST_CASE("reproduce rejects unknown table ids", "[scenario]") {
    CHECK_THROWS_AS(parse_table_id("IV"), ValidationError);
    CHECK(parse_table_id("V") == ReferenceTable::TableV);
    CHECK(parse_table_id("fig2-sweep") == ReferenceTable::Fig2Sweep);
}
