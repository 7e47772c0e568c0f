#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "absim/constants.hpp"
#include "absim/coverage.hpp"
#include "absim/endurance.hpp"
#include "absim/errors.hpp"

namespace absim {

struct ServiceArea {
    double area_km2 = 1.0;

    void validate() const { check_positive(area_km2, "service_area.area_km2"); }
};

struct ChargingStation {
    double charging_power_w = 300.0;

    void validate() const { check_positive(charging_power_w, "charging_station.charging_power_w"); }
};

/// Platforms needed to blanket the area with circular cells of the given
/// radius: ceil(area / disc area). Disc packing, no overlap correction.
inline long long num_abs(const ServiceArea& area, double coverage_radius_m) {
    area.validate();
    check_positive(coverage_radius_m, "coverage_radius_m");
    const double area_m2 = area.area_km2 * constants::kSquareMetersPerSquareKm;
    const double disc_m2 = std::numbers::pi * coverage_radius_m * coverage_radius_m;
    // The 1e-12 relative slack keeps an area of exactly N discs at N
    // platforms when the km^2/m^2 round trip lands one ulp high.
    return static_cast<long long>(std::ceil(area_m2 / disc_m2 * (1.0 - 1e-12)));
}

/// Backup batteries per platform for uninterrupted hot-swap operation:
/// ceil(charging time / service time) = ceil(P_total / P_charging). The
/// battery capacity cancels out of the ratio.
inline long long num_backup_batteries(double total_power_w, const ChargingStation& station) {
    station.validate();
    check_positive(total_power_w, "total_power_w");
    return static_cast<long long>(std::ceil(total_power_w / station.charging_power_w));
}

struct DimensioningReport {
    double coverage_radius_m = 0.0;
    double outage_at_radius = 1.0;
    long long n_abs = 0;
    std::vector<double> battery_masses_kg;           // swept grid
    std::vector<double> total_power_w;               // aligned with the grid
    std::vector<long long> backup_batteries_per_abs; // aligned with the grid

    long long min_backup_per_abs() const {
        return *std::min_element(backup_batteries_per_abs.begin(),
                                 backup_batteries_per_abs.end());
    }
    long long max_backup_per_abs() const {
        return *std::max_element(backup_batteries_per_abs.begin(),
                                 backup_batteries_per_abs.end());
    }
    long long min_total_batteries() const { return n_abs * min_backup_per_abs(); }
    long long max_total_batteries() const { return n_abs * max_backup_per_abs(); }

    /// Fleet-wide battery mass [kg] at each sweep point is
    /// n_abs * backups * battery mass; the report carries the extremes.
    double min_total_battery_mass_kg() const {
        double best = 0.0;
        for (std::size_t i = 0; i < battery_masses_kg.size(); ++i) {
            const double mass = static_cast<double>(n_abs * backup_batteries_per_abs[i]) *
                                battery_masses_kg[i];
            if (i == 0 || mass < best) best = mass;
        }
        return best;
    }
    double max_total_battery_mass_kg() const {
        double best = 0.0;
        for (std::size_t i = 0; i < battery_masses_kg.size(); ++i) {
            const double mass = static_cast<double>(n_abs * backup_batteries_per_abs[i]) *
                                battery_masses_kg[i];
            if (mass > best) best = mass;
        }
        return best;
    }
};

/// Full dimensioning pass for a rotary-wing deployment: coverage radius from
/// the Monte Carlo search, fleet size from disc packing, and backup-battery
/// counts over the battery-mass sweep (no solar panels aboard).
inline DimensioningReport dimension(const PlatformSpec& spec, const BsProfile& profile,
                                    const std::vector<double>& battery_sweep_kg,
                                    const ServiceArea& area, const ChargingStation& station,
                                    double altitude_m, const ChannelEnvironment& env,
                                    const CoverageSearch& search = {},
                                    PayloadCheck check = PayloadCheck::Enforce) {
    if (battery_sweep_kg.empty()) throw DomainError("battery sweep must not be empty");
    if (!profile.rx_sensitivity_dbm) {
        throw ValidationError("bs_profile '" + profile.name +
                              "' has no rx_sensitivity_dbm; coverage analysis needs one");
    }
    if (!(profile.tx_power_w > 0.0)) {
        throw ValidationError("bs_profile '" + profile.name +
                              "' has no positive tx_power_w; coverage analysis needs one");
    }

    const CoverageResult cov =
        coverage_radius(profile.tx_power_w, *profile.rx_sensitivity_dbm, altitude_m, env, search);
    if (!cov.covered) {
        throw FeasibilityError("no coverage: reliability target unmet even at the nadir");
    }

    DimensioningReport report;
    report.coverage_radius_m = cov.radius_m;
    report.outage_at_radius = cov.outage_at_radius;
    report.n_abs = num_abs(area, cov.radius_m);
    for (const double mass_kg : battery_sweep_kg) {
        PlatformSpec loaded = spec;
        loaded.mass.battery_kg = mass_kg;
        loaded.mass.solar_panel_kg = 0.0;
        const double total = total_power_w(loaded, profile, DeploymentMode::FullBs, check);
        report.battery_masses_kg.push_back(mass_kg);
        report.total_power_w.push_back(total);
        report.backup_batteries_per_abs.push_back(num_backup_batteries(total, station));
    }
    return report;
}

}  // namespace absim
