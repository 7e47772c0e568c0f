#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <variant>

#include "absim/constants.hpp"
#include "absim/errors.hpp"

namespace absim {

/// Which onboard equipment counts against the platform's payload capacity.
///
///   AllEquipment : BS, battery and solar panels all ride as payload
///                  (rotary-wing drones).
///   BsOnly       : only the BS counts; panels live in the structural mass
///                  (fixed-wing drones, light-payload HAPs).
///   BsAndPanels  : BS plus solar panels count (heavy-payload HAPs).
enum class PayloadPolicy {
    AllEquipment,
    BsOnly,
    BsAndPanels,
};

/// Mass carried by an airframe, split by role [kg].
struct MassBudget {
    double structural_kg = 0.0;
    double bs_kg = 0.0;
    double battery_kg = 0.0;
    double solar_panel_kg = 0.0;
    double max_payload_kg = 0.0;

    /// Mass that counts against max_payload_kg under the given policy.
    double counted_payload_kg(PayloadPolicy policy) const {
        switch (policy) {
            case PayloadPolicy::AllEquipment:
                return bs_kg + battery_kg + solar_panel_kg;
            case PayloadPolicy::BsOnly:
                return bs_kg;
            case PayloadPolicy::BsAndPanels:
                return bs_kg + solar_panel_kg;
        }
        return 0.0;
    }

    void validate() const {
        check_non_negative(structural_kg, "mass.structural_kg");
        check_non_negative(bs_kg, "mass.bs_kg");
        check_non_negative(battery_kg, "mass.battery_kg");
        check_non_negative(solar_panel_kg, "mass.solar_panel_kg");
        check_non_negative(max_payload_kg, "mass.max_payload_kg");
    }
};

/// Rotor geometry and aerodynamic constants of a hovering multirotor.
struct RotorParams {
    double profile_drag_coeff = 0.012;       // delta
    double correction_factor = 0.1;          // induced-power increment k
    double air_density_kg_m3 = 1.225;
    double solidity = 0.05;                  // blade area over disc area
    double rotor_radius_m = 0.4;
    double angular_velocity_rad_s = 300.0;

    double disc_area_m2() const {
        return std::numbers::pi * rotor_radius_m * rotor_radius_m;
    }

    void validate() const {
        check_non_negative(profile_drag_coeff, "rotor.profile_drag_coeff");
        check_non_negative(correction_factor, "rotor.correction_factor");
        check_positive(air_density_kg_m3, "rotor.air_density_kg_m3");
        check_non_negative(solidity, "rotor.solidity");
        check_positive(rotor_radius_m, "rotor.rotor_radius_m");
        check_positive(angular_velocity_rad_s, "rotor.angular_velocity_rad_s");
    }
};

/// Airframe of a fixed-wing drone flying a banked circle of radius
/// turn_radius_m at constant airspeed. An infinite turn radius means
/// straight flight.
struct FixedWingParams {
    double wingspan_m = 10.0;
    double aspect_ratio = 9.5;
    double zero_lift_drag_coeff = 0.0447;
    double oswald_efficiency = 0.7548;
    double air_density_kg_m3 = 1.112;
    double speed_m_s = 20.0;
    double turn_radius_m = 158.0;
    double gravity_m_s2 = constants::kGravityMps2;

    double wing_area_m2() const { return wingspan_m * wingspan_m / aspect_ratio; }

    void validate() const {
        check_positive(wingspan_m, "fixed_wing.wingspan_m");
        check_positive(aspect_ratio, "fixed_wing.aspect_ratio");
        check_positive(zero_lift_drag_coeff, "fixed_wing.zero_lift_drag_coeff");
        check_positive(oswald_efficiency, "fixed_wing.oswald_efficiency");
        check_positive(air_density_kg_m3, "fixed_wing.air_density_kg_m3");
        check_positive(speed_m_s, "fixed_wing.speed_m_s");
        check_positive(gravity_m_s2, "fixed_wing.gravity_m_s2");
        if (!(turn_radius_m > 0.0)) {  // +inf is allowed, NaN and <= 0 are not
            throw DomainError("fixed_wing.turn_radius_m must be positive (or infinite)");
        }
    }
};

/// Stratospheric fixed-wing platform. Propulsion power follows the drag
/// polar at the lift coefficient that balances weight; avionics draw a
/// fixed mass-proportional power.
struct HapParams {
    double wing_area_m2 = 0.0;
    double drag_coeff = 0.0071;
    double propeller_efficiency = 0.8;       // in (0, 1]
    double air_density_kg_m3 = 0.08891;
    double speed_m_s = 20.0;
    double avionics_mass_kg = 22.0;
    double avionics_power_w_per_kg = 6.0;

    void validate() const {
        check_positive(wing_area_m2, "hap.wing_area_m2");
        check_positive(drag_coeff, "hap.drag_coeff");
        check_positive(propeller_efficiency, "hap.propeller_efficiency");
        if (propeller_efficiency > 1.0) {
            throw DomainError("hap.propeller_efficiency must be <= 1");
        }
        check_positive(air_density_kg_m3, "hap.air_density_kg_m3");
        check_positive(speed_m_s, "hap.speed_m_s");
        check_non_negative(avionics_mass_kg, "hap.avionics_mass_kg");
        check_non_negative(avionics_power_w_per_kg, "hap.avionics_power_w_per_kg");
    }
};

/// An aerial platform: one airframe variant plus its mass budget.
struct PlatformSpec {
    std::string name;
    std::variant<RotorParams, FixedWingParams, HapParams> airframe;
    MassBudget mass;
    PayloadPolicy payload_policy = PayloadPolicy::AllEquipment;

    bool is_rotary_wing() const { return std::holds_alternative<RotorParams>(airframe); }
    bool is_fixed_wing() const { return std::holds_alternative<FixedWingParams>(airframe); }
    bool is_hap() const { return std::holds_alternative<HapParams>(airframe); }

    /// Take-off mass [kg]. Rotary wings lift exactly what the budget lists.
    /// A fixed-wing drone with a BS aboard flies at full payload capacity
    /// (the airframe is dimensioned and loaded to its rated payload); with
    /// no BS it flies empty. HAPs carry the listed BS (and panels, when
    /// they ride as payload), though their propulsion power does not
    /// depend on it.
    double takeoff_mass_kg() const {
        if (is_rotary_wing()) {
            return mass.structural_kg + mass.bs_kg + mass.battery_kg + mass.solar_panel_kg;
        }
        if (is_fixed_wing()) {
            return mass.structural_kg + (mass.bs_kg > 0.0 ? mass.max_payload_kg : 0.0);
        }
        const bool panels_aboard = payload_policy == PayloadPolicy::BsAndPanels;
        return mass.structural_kg + mass.bs_kg + (panels_aboard ? mass.solar_panel_kg : 0.0);
    }

    double takeoff_weight_n() const { return takeoff_mass_kg() * constants::kGravityMps2; }

    void validate() const {
        mass.validate();
        std::visit([](const auto& params) { params.validate(); }, airframe);
    }
};

/// Blade profile drag power of a hovering rotor [W]; independent of weight.
inline double rwd_profile_power(const RotorParams& rotor) {
    rotor.validate();
    const double tip_term = rotor.angular_velocity_rad_s * rotor.angular_velocity_rad_s *
                            rotor.angular_velocity_rad_s * rotor.rotor_radius_m *
                            rotor.rotor_radius_m * rotor.rotor_radius_m;
    return rotor.profile_drag_coeff / 8.0 * rotor.air_density_kg_m3 * rotor.solidity *
           rotor.disc_area_m2() * tip_term;
}

/// Induced power of a hovering rotor at the given all-up weight [W].
/// Scales with weight^(3/2).
inline double rwd_induced_power(const RotorParams& rotor, double weight_n) {
    rotor.validate();
    check_non_negative(weight_n, "weight_n");
    const double denom = std::sqrt(2.0 * rotor.air_density_kg_m3 * rotor.disc_area_m2());
    return (1.0 + rotor.correction_factor) * (weight_n * std::sqrt(weight_n)) / denom;
}

/// Hover power of a rotary-wing drone [W]: profile drag plus induced power.
inline double rwd_hover_power(const RotorParams& rotor, double weight_n) {
    return rwd_profile_power(rotor) + rwd_induced_power(rotor, weight_n);
}

/// Drag-polar coefficients of level circular flight. parasitic multiplies
/// V^3; induced divides by V (and contributes the bank penalty through
/// induced / (g r)^2 * V^3). induced grows with the square of weight.
struct FwdDragCoeffs {
    double parasitic;  // 0.5 * rho * C_D0 * A_w
    double induced;    // 2 W^2 / (pi e0 AR rho A_w)
};

inline FwdDragCoeffs fwd_drag_coeffs(const FixedWingParams& fw, double weight_n) {
    fw.validate();
    check_non_negative(weight_n, "weight_n");
    const double wing_area = fw.wing_area_m2();
    return FwdDragCoeffs{
        0.5 * fw.air_density_kg_m3 * fw.zero_lift_drag_coeff * wing_area,
        2.0 * weight_n * weight_n /
            (std::numbers::pi * fw.oswald_efficiency * fw.aspect_ratio * fw.air_density_kg_m3 *
             wing_area),
    };
}

/// Propulsion power of a fixed-wing drone holding a circular track [W].
/// With an infinite turn radius the bank term vanishes and the expression
/// reduces to straight-flight drag power.
inline double fwd_propulsion_power(const FixedWingParams& fw, double weight_n) {
    const FwdDragCoeffs c = fwd_drag_coeffs(fw, weight_n);
    const double v = fw.speed_m_s;
    const double gr = fw.gravity_m_s2 * fw.turn_radius_m;
    const double bank_term = c.induced / (gr * gr);  // 0 when turn_radius_m is infinite
    return (c.parasitic + bank_term) * v * v * v + c.induced / v;
}

/// Propulsion power of a HAP [W], evaluated through the lift coefficient
/// that balances the given weight. Algebraically this collapses to
/// C_D rho A_w V^3 / (2 eta_p), so the result does not depend on weight;
/// the weight-explicit form is kept as the primary route and the collapse
/// is exercised by tests.
inline double hap_propulsion_power(const HapParams& hap, double weight_n) {
    hap.validate();
    check_positive(weight_n, "weight_n");
    const double lift_coeff = 2.0 * weight_n / (hap.air_density_kg_m3 * hap.speed_m_s *
                                                hap.speed_m_s * hap.wing_area_m2);
    const double lift_pow = lift_coeff * std::sqrt(lift_coeff);
    const double thrust_speed = std::sqrt(2.0 * weight_n * weight_n * weight_n /
                                          (hap.air_density_kg_m3 * hap.wing_area_m2));
    return hap.drag_coeff / (hap.propeller_efficiency * lift_pow) * thrust_speed;
}

/// Avionics power of a HAP [W]: mass times the mass-to-power ratio.
inline double hap_avionics_power(const HapParams& hap) {
    hap.validate();
    return hap.avionics_mass_kg * hap.avionics_power_w_per_kg;
}

/// Mechanical power of a platform at its take-off weight [W].
inline double mechanical_power(const PlatformSpec& spec) {
    spec.validate();
    const double weight_n = spec.takeoff_weight_n();
    return std::visit(
        [&](const auto& params) -> double {
            using T = std::decay_t<decltype(params)>;
            if constexpr (std::is_same_v<T, RotorParams>) {
                return rwd_hover_power(params, weight_n);
            } else if constexpr (std::is_same_v<T, FixedWingParams>) {
                return fwd_propulsion_power(params, weight_n);
            } else {
                return hap_propulsion_power(params, weight_n) + hap_avionics_power(params);
            }
        },
        spec.airframe);
}

}  // namespace absim
