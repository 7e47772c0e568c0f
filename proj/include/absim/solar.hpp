#pragma once

#include <string>

#include "absim/constants.hpp"
#include "absim/errors.hpp"

namespace absim {

/// Photovoltaic installation: collecting area, cell efficiency and the
/// mass the panels add per square meter.
struct SolarPanel {
    double area_m2 = 0.0;
    double efficiency = 0.3775;
    double areal_density_kg_m2 = 0.114;

    void validate() const {
        check_non_negative(area_m2, "solar_panel.area_m2");
        check_unit_interval(efficiency, "solar_panel.efficiency");
        check_non_negative(areal_density_kg_m2, "solar_panel.areal_density_kg_m2");
    }
};

/// A deployment region characterised by its daily solar irradiance.
struct Region {
    std::string name;
    double daily_irradiance_kwh_m2 = 0.0;

    void validate() const {
        check_non_negative(daily_irradiance_kwh_m2, "region.daily_irradiance_kwh_m2");
    }
};

/// Energy harvested over one day [Wh]: area x irradiance x cell efficiency.
inline double daily_energy_wh(const SolarPanel& panel, const Region& region) {
    panel.validate();
    region.validate();
    return panel.area_m2 * (region.daily_irradiance_kwh_m2 * constants::kWhPerKwh) *
           panel.efficiency;
}

/// Harvested power averaged over the 24-hour day [W].
inline double average_harvested_power_w(const SolarPanel& panel, const Region& region) {
    return daily_energy_wh(panel, region) / constants::kHoursPerDay;
}

inline double panel_mass_kg(const SolarPanel& panel) {
    panel.validate();
    return panel.area_m2 * panel.areal_density_kg_m2;
}

}  // namespace absim
