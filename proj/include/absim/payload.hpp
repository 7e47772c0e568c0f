#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "absim/errors.hpp"
#include "absim/platform.hpp"

namespace absim {

enum class BsClass {
    Pico,
    Micro,
    Macro,
    Split,  // antenna + front-end only; baseband stays on the ground
};

inline const char* to_string(BsClass cls) {
    switch (cls) {
        case BsClass::Pico: return "pico";
        case BsClass::Micro: return "micro";
        case BsClass::Macro: return "macro";
        case BsClass::Split: return "split";
    }
    return "?";
}

/// Full BS flies as-is; Split offloads the baseband unit to the ground,
/// removing its power draw from the airborne total.
enum class DeploymentMode {
    FullBs,
    Split,
};

/// A base-station class with its mass and power breakdown.
struct BsProfile {
    std::string name;
    BsClass cls = BsClass::Pico;
    double mass_kg = 0.0;
    double baseband_w = 0.0;    // P_BB
    double radio_w = 0.0;       // P_RF
    double amplifier_w = 0.0;   // P_PA
    double overhead_w = 0.0;    // P_OH
    double tx_power_w = 0.0;    // > 0 only when the profile is used for coverage
    std::optional<double> rx_sensitivity_dbm;

    void validate() const {
        check_positive(mass_kg, "bs_profile.mass_kg");
        check_non_negative(baseband_w, "bs_profile.baseband_w");
        check_non_negative(radio_w, "bs_profile.radio_w");
        check_non_negative(amplifier_w, "bs_profile.amplifier_w");
        check_non_negative(overhead_w, "bs_profile.overhead_w");
        check_non_negative(tx_power_w, "bs_profile.tx_power_w");
        if (rx_sensitivity_dbm) check_finite(*rx_sensitivity_dbm, "bs_profile.rx_sensitivity_dbm");
    }
};

/// Airborne communication power of the BS [W]. Split deployments (and
/// split-class profiles) leave the baseband on the ground.
inline double bs_comm_power(const BsProfile& profile, DeploymentMode mode) {
    profile.validate();
    const bool baseband_aboard = mode == DeploymentMode::FullBs && profile.cls != BsClass::Split;
    return (baseband_aboard ? profile.baseband_w : 0.0) + profile.radio_w + profile.amplifier_w +
           profile.overhead_w;
}

/// Backhaul power as a fraction of the service-link power [W]. The fraction
/// is capped at 10%. Excluded from deployment totals unless explicitly
/// requested: reference totals are service-link only.
inline double backhaul_power(double service_link_w, double fraction = 0.1) {
    check_non_negative(service_link_w, "service_link_w");
    check_finite(fraction, "fraction");
    if (fraction < 0.0 || fraction > 0.1) {
        throw DomainError("backhaul fraction must lie in [0, 0.1], got " +
                          std::to_string(fraction));
    }
    return fraction * service_link_w;
}

enum class PayloadCheck {
    Enforce,
    /// Skip the BS-mass-vs-payload test. Used by scenarios that model a
    /// BS marginally heavier than the platform's rated payload.
    Waive,
};

inline void enforce_bs_fits_payload(const PlatformSpec& spec, const BsProfile& profile) {
    MassBudget budget = spec.mass;
    budget.bs_kg = profile.mass_kg;
    const double counted = budget.counted_payload_kg(spec.payload_policy);
    if (counted > budget.max_payload_kg) {
        std::ostringstream msg;
        msg << "bs '" << profile.name << "' (" << profile.mass_kg
            << " kg) does not fit platform '" << spec.name << "': counted payload " << counted
            << " kg exceeds max payload " << budget.max_payload_kg << " kg";
        throw FeasibilityError(msg.str());
    }
}

/// Extra mechanical power induced by carrying the BS, plus the BS's own
/// communication power. The two together form the combined BS power.
struct CombinedBsPower {
    double excess_mechanical_w = 0.0;
    double comm_w = 0.0;

    double total_w() const { return excess_mechanical_w + comm_w; }
};

inline CombinedBsPower combined_bs_power(const PlatformSpec& spec, const BsProfile& profile,
                                         DeploymentMode mode,
                                         PayloadCheck check = PayloadCheck::Enforce) {
    profile.validate();
    if (check == PayloadCheck::Enforce) enforce_bs_fits_payload(spec, profile);

    const double comm = bs_comm_power(profile, mode);
    if (spec.is_hap()) {
        // HAP propulsion power is weight-independent: no excess.
        return CombinedBsPower{0.0, comm};
    }
    PlatformSpec with_bs = spec;
    with_bs.mass.bs_kg = profile.mass_kg;
    PlatformSpec without_bs = spec;
    without_bs.mass.bs_kg = 0.0;
    return CombinedBsPower{mechanical_power(with_bs) - mechanical_power(without_bs), comm};
}

enum class PlatformCategory {
    RotaryWing,
    FixedWing,
    HapHeavyPayload,
    HapLightPayload,
};

inline PlatformCategory category_of(const PlatformSpec& spec) {
    if (spec.is_rotary_wing()) return PlatformCategory::RotaryWing;
    if (spec.is_fixed_wing()) return PlatformCategory::FixedWing;
    return spec.payload_policy == PayloadPolicy::BsAndPanels ? PlatformCategory::HapHeavyPayload
                                                             : PlatformCategory::HapLightPayload;
}

inline const char* to_string(PlatformCategory cat) {
    switch (cat) {
        case PlatformCategory::RotaryWing: return "rotary-wing";
        case PlatformCategory::FixedWing: return "fixed-wing";
        case PlatformCategory::HapHeavyPayload: return "hap-heavy-payload";
        case PlatformCategory::HapLightPayload: return "hap-light-payload";
    }
    return "?";
}

/// Which BS classes give useful coverage from each platform category.
/// A picocell on a fixed-wing drone at ~1 km altitude is liftable but its
/// short range makes it pointless, hence feasible-but-not-compatible.
struct CompatibilityMatrix {
    std::map<PlatformCategory, std::set<BsClass>> compatible;

    static CompatibilityMatrix standard() {
        return CompatibilityMatrix{{
            {PlatformCategory::RotaryWing, {BsClass::Pico, BsClass::Micro}},
            {PlatformCategory::FixedWing, {BsClass::Micro}},
            {PlatformCategory::HapHeavyPayload, {BsClass::Macro}},
            {PlatformCategory::HapLightPayload, {BsClass::Split}},
        }};
    }
};

enum class Feasibility {
    FeasibleAndCompatible,
    FeasibleOnly,
    Infeasible,
};

inline const char* to_string(Feasibility verdict) {
    switch (verdict) {
        case Feasibility::FeasibleAndCompatible: return "feasible_and_compatible";
        case Feasibility::FeasibleOnly: return "feasible_only";
        case Feasibility::Infeasible: return "infeasible";
    }
    return "?";
}

struct FeasibilityReport {
    Feasibility verdict = Feasibility::Infeasible;
    std::string reason;
};

/// Mass test first (the BS plus whatever else shares the payload must fit),
/// then the compatibility matrix.
inline FeasibilityReport check_feasibility(
    const PlatformSpec& spec, const BsProfile& profile,
    const CompatibilityMatrix& matrix = CompatibilityMatrix::standard()) {
    spec.validate();
    profile.validate();

    MassBudget budget = spec.mass;
    budget.bs_kg = profile.mass_kg;
    const double counted = budget.counted_payload_kg(spec.payload_policy);
    if (counted > budget.max_payload_kg) {
        std::ostringstream msg;
        msg << "bs mass " << profile.mass_kg << " kg (counted payload " << counted
            << " kg) exceeds max payload " << budget.max_payload_kg << " kg";
        return FeasibilityReport{Feasibility::Infeasible, msg.str()};
    }

    const PlatformCategory cat = category_of(spec);
    const auto it = matrix.compatible.find(cat);
    const bool compatible = it != matrix.compatible.end() && it->second.count(profile.cls) > 0;
    if (!compatible) {
        std::ostringstream msg;
        msg << to_string(profile.cls) << " fits the payload but is not a compatible class for a "
            << to_string(cat) << " platform";
        return FeasibilityReport{Feasibility::FeasibleOnly, msg.str()};
    }
    return FeasibilityReport{Feasibility::FeasibleAndCompatible,
                             "fits the payload and matches the platform's coverage class"};
}

}  // namespace absim
