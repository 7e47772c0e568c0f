#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "absim/coverage.hpp"
#include "absim/defaults.hpp"
#include "absim/dimensioning.hpp"
#include "absim/endurance.hpp"
#include "absim/report.hpp"

namespace absim {

struct MonteCarloControls {
    std::uint64_t seed = 42;
    int samples = 10000;
    double radius_step_m = 1.0;
    double reliability = 0.99;

    CoverageSearch search() const { return CoverageSearch{reliability, samples, seed, radius_step_m}; }
};

struct BatterySweepGrid {
    std::vector<double> masses_kg;
    std::vector<double> energy_densities_wh_kg;
};

struct CoverageSetup {
    double altitude_m = 100.0;
    ChannelEnvironment environment;
};

/// A fully resolved scenario: every named entity looked up, every default
/// applied. Produced by load_scenario / parse_scenario or by the built-in
/// scenario set.
struct ScenarioConfig {
    std::string id;
    PlatformSpec platform;
    BsProfile profile;
    DeploymentMode mode = DeploymentMode::FullBs;
    BatterySpec battery{0.0, 350.0};
    std::optional<BatterySweepGrid> battery_sweep;
    SolarPanel panel{0.0, 0.3775, 0.114};
    std::optional<std::vector<double>> panel_area_sweep_m2;
    Region region = defaults::enugu();
    std::optional<CoverageSetup> coverage;
    std::optional<ServiceArea> service_area;
    std::optional<ChargingStation> charging;
    MonteCarloControls monte_carlo;
    bool waive_payload_check = false;

    PayloadCheck payload_check() const {
        return waive_payload_check ? PayloadCheck::Waive : PayloadCheck::Enforce;
    }
};

namespace cfg {

using nlohmann::json;

/// Strict object reader: every key must be consumed and every violation is
/// collected (not just the first), so one run reports the whole damage.
class Reader {
public:
    Reader(const json& node, std::string path, std::vector<std::string>& errors)
        : node_(&node), path_(std::move(path)), errors_(&errors) {
        if (!node.is_object()) {
            fail("expected an object");
            node_ = nullptr;
        }
    }

    bool has(const char* key) const { return node_ != nullptr && node_->contains(key); }

    double number(const char* key) {
        if (!has(key)) {
            fail(std::string(key) + ": required key is missing");
            return 0.0;
        }
        return number_or(key, 0.0);
    }

    double number_or(const char* key, double fallback) {
        if (!has(key)) return fallback;
        consumed_.insert(key);
        const json& v = node_->at(key);
        if (!v.is_number()) {
            fail(std::string(key) + ": expected a number");
            return fallback;
        }
        return v.get<double>();
    }

    std::uint64_t u64_or(const char* key, std::uint64_t fallback) {
        if (!has(key)) return fallback;
        consumed_.insert(key);
        const json& v = node_->at(key);
        if (!v.is_number_unsigned() && !v.is_number_integer()) {
            fail(std::string(key) + ": expected a non-negative integer");
            return fallback;
        }
        return v.get<std::uint64_t>();
    }

    int int_or(const char* key, int fallback) {
        if (!has(key)) return fallback;
        consumed_.insert(key);
        const json& v = node_->at(key);
        if (!v.is_number_integer()) {
            fail(std::string(key) + ": expected an integer");
            return fallback;
        }
        return v.get<int>();
    }

    bool bool_or(const char* key, bool fallback) {
        if (!has(key)) return fallback;
        consumed_.insert(key);
        const json& v = node_->at(key);
        if (!v.is_boolean()) {
            fail(std::string(key) + ": expected a boolean");
            return fallback;
        }
        return v.get<bool>();
    }

    std::string string(const char* key) {
        if (!has(key)) {
            fail(std::string(key) + ": required key is missing");
            return {};
        }
        return string_or(key, "");
    }

    std::string string_or(const char* key, const std::string& fallback) {
        if (!has(key)) return fallback;
        consumed_.insert(key);
        const json& v = node_->at(key);
        if (!v.is_string()) {
            fail(std::string(key) + ": expected a string");
            return fallback;
        }
        return v.get<std::string>();
    }

    std::vector<double> numbers(const char* key) {
        std::vector<double> out;
        if (!has(key)) {
            fail(std::string(key) + ": required key is missing");
            return out;
        }
        consumed_.insert(key);
        const json& v = node_->at(key);
        if (!v.is_array()) {
            fail(std::string(key) + ": expected an array of numbers");
            return out;
        }
        for (const auto& item : v) {
            if (!item.is_number()) {
                fail(std::string(key) + ": expected an array of numbers");
                return {};
            }
            out.push_back(item.get<double>());
        }
        return out;
    }

    /// Marks the key consumed and hands back the raw node.
    const json* raw(const char* key) {
        if (!has(key)) return nullptr;
        consumed_.insert(key);
        return &node_->at(key);
    }

    /// Reports any key that was never consumed. Misspelled unit suffixes
    /// surface here instead of being silently converted.
    void finish() {
        if (!node_) return;
        for (const auto& [key, value] : node_->items()) {
            if (!consumed_.count(key)) fail("unknown key '" + key + "'");
        }
    }

    void fail(const std::string& message) { errors_->push_back(path_ + ": " + message); }

    const std::string& path() const { return path_; }
    std::vector<std::string>& errors() { return *errors_; }

private:
    const json* node_;
    std::string path_;
    std::vector<std::string>* errors_;
    std::set<std::string> consumed_;
};

inline void validate_into(const char* path, std::vector<std::string>& errors, auto&& object) {
    try {
        object.validate();
    } catch (const DomainError& e) {
        errors.push_back(std::string(path) + ": " + e.what());
    }
}

inline PlatformSpec parse_platform(const json& node, std::vector<std::string>& errors) {
    if (node.is_string()) {
        try {
            return defaults::platform(node.get<std::string>());
        } catch (const ValidationError& e) {
            errors.push_back(std::string("platform: ") + e.what());
            return defaults::rwd();
        }
    }
    Reader reader(node, "platform", errors);
    PlatformSpec spec;
    const std::string type = reader.string("type");
    spec.name = reader.string_or("name", type);

    if (const json* mass = reader.raw("mass")) {
        Reader m(*mass, "platform.mass", errors);
        spec.mass.structural_kg = m.number("structural_kg");
        spec.mass.max_payload_kg = m.number("max_payload_kg");
        m.finish();
    } else {
        reader.fail("mass: required key is missing");
    }

    if (type == "rotary-wing") {
        RotorParams rotor;
        if (const json* r = reader.raw("rotor")) {
            Reader rr(*r, "platform.rotor", errors);
            rotor.profile_drag_coeff = rr.number_or("profile_drag_coeff", rotor.profile_drag_coeff);
            rotor.correction_factor = rr.number_or("correction_factor", rotor.correction_factor);
            rotor.air_density_kg_m3 = rr.number_or("air_density_kg_per_m3", rotor.air_density_kg_m3);
            rotor.solidity = rr.number_or("solidity", rotor.solidity);
            rotor.rotor_radius_m = rr.number_or("rotor_radius_m", rotor.rotor_radius_m);
            rotor.angular_velocity_rad_s =
                rr.number_or("angular_velocity_rad_per_s", rotor.angular_velocity_rad_s);
            rr.finish();
        }
        spec.airframe = rotor;
        spec.payload_policy = PayloadPolicy::AllEquipment;
    } else if (type == "fixed-wing") {
        FixedWingParams fw;
        if (const json* f = reader.raw("fixed_wing")) {
            Reader fr(*f, "platform.fixed_wing", errors);
            fw.wingspan_m = fr.number("wingspan_m");
            fw.aspect_ratio = fr.number_or("aspect_ratio", fw.aspect_ratio);
            fw.zero_lift_drag_coeff = fr.number_or("zero_lift_drag_coeff", fw.zero_lift_drag_coeff);
            fw.oswald_efficiency = fr.number_or("oswald_efficiency", fw.oswald_efficiency);
            fw.air_density_kg_m3 = fr.number_or("air_density_kg_per_m3", fw.air_density_kg_m3);
            fw.speed_m_s = fr.number_or("speed_m_per_s", fw.speed_m_s);
            fw.gravity_m_s2 = fr.number_or("gravity_m_per_s2", fw.gravity_m_s2);
            if (fr.has("turn_radius_m")) {
                const json& tr = *fr.raw("turn_radius_m");
                if (tr.is_string() && tr.get<std::string>() == "infinity") {
                    fw.turn_radius_m = std::numeric_limits<double>::infinity();
                } else if (tr.is_number()) {
                    fw.turn_radius_m = tr.get<double>();
                } else {
                    fr.fail("turn_radius_m: expected a number or \"infinity\"");
                }
            }
            fr.finish();
        } else {
            reader.fail("fixed_wing: required key is missing");
        }
        spec.airframe = fw;
        spec.payload_policy = PayloadPolicy::BsOnly;
    } else if (type == "hap") {
        HapParams hap;
        if (const json* h = reader.raw("hap")) {
            Reader hr(*h, "platform.hap", errors);
            hap.wing_area_m2 = hr.number("wing_area_m2");
            hap.drag_coeff = hr.number_or("drag_coeff", hap.drag_coeff);
            hap.propeller_efficiency = hr.number_or("propeller_efficiency", hap.propeller_efficiency);
            hap.air_density_kg_m3 = hr.number_or("air_density_kg_per_m3", hap.air_density_kg_m3);
            hap.speed_m_s = hr.number_or("speed_m_per_s", hap.speed_m_s);
            hap.avionics_mass_kg = hr.number_or("avionics_mass_kg", hap.avionics_mass_kg);
            hap.avionics_power_w_per_kg =
                hr.number_or("avionics_power_W_per_kg", hap.avionics_power_w_per_kg);
            hr.finish();
        } else {
            reader.fail("hap: required key is missing");
        }
        spec.airframe = hap;
        spec.payload_policy = reader.bool_or("panels_in_payload", false)
                                  ? PayloadPolicy::BsAndPanels
                                  : PayloadPolicy::BsOnly;
    } else {
        reader.fail("type: must be one of rotary-wing, fixed-wing, hap");
    }
    reader.finish();
    return spec;
}

inline BsProfile parse_bs_profile(const json& node, std::vector<std::string>& errors) {
    if (node.is_string()) {
        try {
            return defaults::bs_profile(node.get<std::string>());
        } catch (const ValidationError& e) {
            errors.push_back(std::string("bs_profile: ") + e.what());
            return defaults::pico();
        }
    }
    Reader reader(node, "bs_profile", errors);
    BsProfile profile;
    profile.name = reader.string_or("name", "custom");
    const std::string cls = reader.string("class");
    if (cls == "pico") profile.cls = BsClass::Pico;
    else if (cls == "micro") profile.cls = BsClass::Micro;
    else if (cls == "macro") profile.cls = BsClass::Macro;
    else if (cls == "split") profile.cls = BsClass::Split;
    else reader.fail("class: must be one of pico, micro, macro, split");
    profile.mass_kg = reader.number("mass_kg");
    profile.baseband_w = reader.number_or("baseband_W", 0.0);
    profile.radio_w = reader.number_or("radio_W", 0.0);
    profile.amplifier_w = reader.number_or("amplifier_W", 0.0);
    profile.overhead_w = reader.number_or("overhead_W", 0.0);
    profile.tx_power_w = reader.number_or("tx_power_W", 0.0);
    if (reader.has("rx_sensitivity_dBm")) {
        profile.rx_sensitivity_dbm = reader.number_or("rx_sensitivity_dBm", 0.0);
    }
    reader.finish();
    return profile;
}

inline Region parse_region(const json& node, std::vector<std::string>& errors) {
    if (node.is_string()) {
        try {
            return defaults::region(node.get<std::string>());
        } catch (const ValidationError& e) {
            errors.push_back(std::string("region: ") + e.what());
            return defaults::enugu();
        }
    }
    Reader reader(node, "region", errors);
    Region region;
    region.name = reader.string_or("name", "custom");
    region.daily_irradiance_kwh_m2 = reader.number("daily_irradiance_kWh_per_m2_day");
    reader.finish();
    return region;
}

inline ChannelEnvironment parse_environment(const json& node, std::vector<std::string>& errors) {
    if (node.is_string()) {
        try {
            return defaults::environment(node.get<std::string>());
        } catch (const ValidationError& e) {
            errors.push_back(std::string("coverage.environment: ") + e.what());
            return defaults::urban_2000mhz();
        }
    }
    Reader reader(node, "coverage.environment", errors);
    ChannelEnvironment env;
    env.name = reader.string_or("name", "custom");
    env.frequency_mhz = reader.number("frequency_MHz");
    env.mean_excess_los_db = reader.number("mean_excess_los_dB");
    env.mean_excess_nlos_db = reader.number("mean_excess_nlos_dB");
    env.sigma_scale_los_db = reader.number("sigma_scale_los_dB");
    env.sigma_scale_nlos_db = reader.number("sigma_scale_nlos_dB");
    env.sigma_decay_los = reader.number("sigma_decay_los_per_deg");
    env.sigma_decay_nlos = reader.number("sigma_decay_nlos_per_deg");
    env.los_coeff = reader.number("los_coeff");
    env.los_exponent = reader.number("los_exponent");
    env.min_elevation_deg = reader.number("min_elevation_deg");
    reader.finish();
    return env;
}

}  // namespace cfg

/// Default panel area when a scenario does not spell one out: fixed wings
/// carry cells across the whole wing, the default HAPs use their fitted
/// areas, rotary wings fly bare.
inline double default_panel_area_m2(const PlatformSpec& platform) {
    if (platform.is_fixed_wing()) {
        return std::get<FixedWingParams>(platform.airframe).wing_area_m2();
    }
    if (platform.is_hap()) {
        for (const double span : {25.0, 30.0, 35.0, 60.0}) {
            if (platform.name == "hap-" + std::to_string(static_cast<int>(span)) + "m") {
                return defaults::hap_panel_area_m2(span);
            }
        }
    }
    return 0.0;
}

inline ScenarioConfig parse_scenario(const nlohmann::json& root, const std::string& source,
                                     std::ostream* run_log = nullptr) {
    std::vector<std::string> errors;
    cfg::Reader reader(root, source, errors);
    ScenarioConfig config;

    config.id = reader.string("id");
    if (const auto* platform = reader.raw("platform")) {
        config.platform = cfg::parse_platform(*platform, errors);
    } else {
        reader.fail("platform: required key is missing");
    }
    if (const auto* profile = reader.raw("bs_profile")) {
        config.profile = cfg::parse_bs_profile(*profile, errors);
    } else {
        reader.fail("bs_profile: required key is missing");
    }

    const std::string mode = reader.string_or("deployment", "full");
    if (mode == "full") config.mode = DeploymentMode::FullBs;
    else if (mode == "split") config.mode = DeploymentMode::Split;
    else reader.fail("deployment: must be 'full' or 'split'");

    if (const auto* battery = reader.raw("battery")) {
        cfg::Reader b(*battery, "battery", errors);
        config.battery.mass_kg = b.number("mass_kg");
        config.battery.energy_density_wh_kg =
            b.number_or("energy_density_Wh_per_kg", config.battery.energy_density_wh_kg);
        b.finish();
    }
    if (const auto* sweep = reader.raw("battery_sweep")) {
        cfg::Reader s(*sweep, "battery_sweep", errors);
        BatterySweepGrid grid;
        grid.masses_kg = s.numbers("mass_kg");
        grid.energy_densities_wh_kg = s.numbers("energy_density_Wh_per_kg");
        s.finish();
        if (grid.masses_kg.empty()) s.fail("mass_kg: must not be empty");
        if (grid.energy_densities_wh_kg.empty()) s.fail("energy_density_Wh_per_kg: must not be empty");
        config.battery_sweep = std::move(grid);
    }

    config.panel.area_m2 = default_panel_area_m2(config.platform);
    if (const auto* panel = reader.raw("solar_panel")) {
        cfg::Reader p(*panel, "solar_panel", errors);
        config.panel.area_m2 = p.number_or("area_m2", config.panel.area_m2);
        config.panel.efficiency = p.number_or("efficiency", config.panel.efficiency);
        config.panel.areal_density_kg_m2 =
            p.number_or("areal_density_kg_per_m2", config.panel.areal_density_kg_m2);
        p.finish();
    }
    if (reader.has("panel_area_sweep_m2")) {
        config.panel_area_sweep_m2 = reader.numbers("panel_area_sweep_m2");
    }

    if (const auto* region = reader.raw("region")) {
        config.region = cfg::parse_region(*region, errors);
    }

    if (const auto* coverage = reader.raw("coverage")) {
        cfg::Reader c(*coverage, "coverage", errors);
        CoverageSetup setup;
        setup.altitude_m = c.number("altitude_m");
        if (const auto* env = c.raw("environment")) {
            setup.environment = cfg::parse_environment(*env, errors);
        } else {
            setup.environment = defaults::urban_2000mhz();
        }
        c.finish();
        config.coverage = std::move(setup);
    }
    if (const auto* area = reader.raw("service_area")) {
        cfg::Reader a(*area, "service_area", errors);
        config.service_area = ServiceArea{a.number("area_km2")};
        a.finish();
    }
    if (const auto* charging = reader.raw("charging_station")) {
        cfg::Reader c(*charging, "charging_station", errors);
        config.charging = ChargingStation{c.number("charging_power_W")};
        c.finish();
    }
    if (const auto* mc = reader.raw("monte_carlo")) {
        cfg::Reader m(*mc, "monte_carlo", errors);
        config.monte_carlo.seed = m.u64_or("seed", config.monte_carlo.seed);
        config.monte_carlo.samples = m.int_or("samples", config.monte_carlo.samples);
        config.monte_carlo.radius_step_m =
            m.number_or("radius_step_m", config.monte_carlo.radius_step_m);
        config.monte_carlo.reliability = m.number_or("reliability", config.monte_carlo.reliability);
        m.finish();
    }
    config.waive_payload_check = reader.bool_or("waive_payload_check", false);
    reader.finish();

    if (config.id.empty() && errors.empty()) errors.push_back(source + ": id: must not be empty");

    // numeric sanity of everything we built, with config-path context
    cfg::validate_into("platform", errors, config.platform);
    cfg::validate_into("bs_profile", errors, config.profile);
    cfg::validate_into("battery", errors, config.battery);
    cfg::validate_into("solar_panel", errors, config.panel);
    cfg::validate_into("region", errors, config.region);
    if (config.coverage) {
        cfg::validate_into("coverage.environment", errors, config.coverage->environment);
        if (!(config.coverage->altitude_m > 0.0)) {
            errors.push_back("coverage.altitude_m: must be positive");
        }
        if (!(config.profile.tx_power_w > 0.0)) {
            errors.push_back("bs_profile.tx_power_W: coverage analysis needs a positive value");
        }
        if (!config.profile.rx_sensitivity_dbm) {
            errors.push_back("bs_profile.rx_sensitivity_dBm: coverage analysis needs a value");
        }
    }
    if (config.service_area) cfg::validate_into("service_area", errors, *config.service_area);
    if (config.charging) cfg::validate_into("charging_station", errors, *config.charging);
    if (config.battery_sweep) {
        for (const double m : config.battery_sweep->masses_kg) {
            if (!(m >= 0.0)) errors.push_back("battery_sweep.mass_kg: values must be >= 0");
        }
        for (const double ed : config.battery_sweep->energy_densities_wh_kg) {
            if (!(ed > 0.0)) {
                errors.push_back("battery_sweep.energy_density_Wh_per_kg: values must be > 0");
            }
        }
    }
    if (config.panel_area_sweep_m2) {
        for (const double a : *config.panel_area_sweep_m2) {
            if (!(a >= 0.0)) errors.push_back("panel_area_sweep_m2: values must be >= 0");
        }
    }
    try {
        config.monte_carlo.search().validate();
    } catch (const DomainError& e) {
        errors.push_back(std::string("monte_carlo: ") + e.what());
    }

    if (!errors.empty()) throw ValidationError(errors);

    if (run_log) {
        *run_log << "[" << config.id << "] back-solved defaults in effect:\n";
        for (const auto& entry : defaults::provenance_ledger()) {
            *run_log << "  " << entry.name << " = " << format_double(entry.value) << " "
                     << entry.unit << "  (" << entry.derivation << ")\n";
        }
    }
    return config;
}

inline ScenarioConfig load_scenario(const std::filesystem::path& path,
                                    std::ostream* run_log = nullptr) {
    std::ifstream in(path);
    if (!in) throw ValidationError(path.string() + ": cannot open file");
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/true,
                                     /*ignore_comments=*/true);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
    return parse_scenario(root, path.filename().string(), run_log);
}

}  // namespace absim
