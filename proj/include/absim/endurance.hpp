#pragma once

#include <optional>

#include "absim/errors.hpp"
#include "absim/payload.hpp"
#include "absim/platform.hpp"
#include "absim/solar.hpp"

namespace absim {

struct BatterySpec {
    double mass_kg = 0.0;
    double energy_density_wh_kg = 350.0;  // specific energy

    double capacity_wh() const { return energy_density_wh_kg * mass_kg; }

    void validate() const {
        check_non_negative(mass_kg, "battery.mass_kg");
        check_positive(energy_density_wh_kg, "battery.energy_density_wh_kg");
    }
};

/// A harvested-to-consumption ratio at or above 1 means the platform can in
/// principle stay aloft indefinitely; below the robustness threshold the
/// margin is too thin to trust once real-world harvesting losses bite.
inline constexpr double kLowMarginPsiThreshold = 1.5;

struct EnduranceResult {
    double total_power_w = 0.0;
    double harvested_power_w = 0.0;
    double psi = 0.0;                          // harvested-to-consumption ratio
    std::optional<double> service_time_h;      // empty => indefinite (psi >= 1)
    double robustness_margin = -1.0;           // psi - 1
    bool low_margin = false;                   // indefinite, but psi below threshold

    bool indefinite() const { return !service_time_h.has_value(); }
};

/// Total airborne power [W]: mechanical power at take-off weight plus the
/// BS communication power. The platform's mass budget must already list
/// the battery and panel masses it carries.
inline double total_power_w(const PlatformSpec& spec, const BsProfile& profile,
                            DeploymentMode mode, PayloadCheck check = PayloadCheck::Enforce) {
    if (check == PayloadCheck::Enforce) enforce_bs_fits_payload(spec, profile);
    PlatformSpec loaded = spec;
    loaded.mass.bs_kg = profile.mass_kg;
    return mechanical_power(loaded) + bs_comm_power(profile, mode);
}

namespace detail {

/// Spec copy carrying the given battery and panel masses in its budget.
inline PlatformSpec with_equipment(const PlatformSpec& spec, const BsProfile& profile,
                                   double battery_kg, const SolarPanel& panel) {
    PlatformSpec loaded = spec;
    loaded.mass.bs_kg = profile.mass_kg;
    loaded.mass.battery_kg = battery_kg;
    loaded.mass.solar_panel_kg = panel_mass_kg(panel);
    return loaded;
}

}  // namespace detail

/// Battery-limited service time of a rotary-wing drone. The battery and
/// panel masses are folded into the take-off weight before computing the
/// hover power; harvested power offsets the drain.
inline EnduranceResult rwd_service_time(const PlatformSpec& spec, const BsProfile& profile,
                                        const BatterySpec& battery, const SolarPanel& panel,
                                        const Region& region,
                                        PayloadCheck check = PayloadCheck::Enforce,
                                        double low_margin_threshold = kLowMarginPsiThreshold) {
    if (!spec.is_rotary_wing()) {
        throw DomainError("rwd_service_time requires a rotary-wing platform");
    }
    battery.validate();
    const PlatformSpec loaded = detail::with_equipment(spec, profile, battery.mass_kg, panel);
    if (check == PayloadCheck::Enforce) {
        const double counted = loaded.mass.counted_payload_kg(loaded.payload_policy);
        if (counted > loaded.mass.max_payload_kg) {
            throw FeasibilityError("equipment payload " + std::to_string(counted) +
                                   " kg exceeds max payload " +
                                   std::to_string(loaded.mass.max_payload_kg) + " kg");
        }
    }

    const double total = mechanical_power(loaded) + bs_comm_power(profile, DeploymentMode::FullBs);
    if (!(total > 0.0)) throw DomainError("total power must be positive");
    const double harvested = average_harvested_power_w(panel, region);

    EnduranceResult result;
    result.total_power_w = total;
    result.harvested_power_w = harvested;
    result.psi = harvested / total;
    result.robustness_margin = result.psi - 1.0;
    if (result.psi >= 1.0) {
        result.low_margin = result.psi < low_margin_threshold;
        return result;  // indefinite; not reachable with realistic hover powers
    }
    result.service_time_h = battery.capacity_wh() / (total - harvested);
    return result;
}

/// Daily harvested energy over daily consumed energy (dimensionless).
inline double harvest_ratio(const PlatformSpec& spec, const BsProfile& profile,
                            DeploymentMode mode, const SolarPanel& panel, const Region& region,
                            PayloadCheck check = PayloadCheck::Enforce) {
    PlatformSpec loaded = spec;
    loaded.mass.solar_panel_kg = panel_mass_kg(panel);
    const double total = total_power_w(loaded, profile, mode, check);
    if (!(total > 0.0)) throw DomainError("total power must be positive");
    return daily_energy_wh(panel, region) / (constants::kHoursPerDay * total);
}

/// Endurance of a solar-flown platform (fixed-wing drone or HAP): psi >= 1
/// is indefinite, anything less runs out after 24 * psi hours.
inline EnduranceResult classify_endurance(double psi, double total_power_w_,
                                          double low_margin_threshold = kLowMarginPsiThreshold) {
    check_non_negative(psi, "psi");
    check_positive(total_power_w_, "total_power_w");
    check_positive(low_margin_threshold, "low_margin_threshold");
    EnduranceResult result;
    result.total_power_w = total_power_w_;
    result.harvested_power_w = psi * total_power_w_;
    result.psi = psi;
    result.robustness_margin = psi - 1.0;
    if (psi >= 1.0) {
        result.low_margin = psi < low_margin_threshold;
        return result;
    }
    result.service_time_h = constants::kHoursPerDay * psi;
    return result;
}

}  // namespace absim
