#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "absim/errors.hpp"
#include "absim/rng.hpp"

namespace absim {

/// Air-to-ground channel: free-space loss plus an elevation-dependent excess
/// drawn from a LoS/NLoS Gaussian mixture. Elevation angles are in degrees
/// throughout; sigma decays as a_x * exp(-b_x * theta_deg) and the LoS
/// probability is los_coeff * (theta - min_elevation)^los_exponent.
struct ChannelEnvironment {
    std::string name;
    double frequency_mhz = 2000.0;
    double mean_excess_los_db = 1.0;       // mu_L
    double mean_excess_nlos_db = 20.0;     // mu_NL
    double sigma_scale_los_db = 10.39;     // a_L
    double sigma_scale_nlos_db = 29.6;     // a_NL
    double sigma_decay_los = 0.05;         // b_L, per degree
    double sigma_decay_nlos = 0.03;        // b_NL, per degree
    double los_coeff = 0.6;                // g1
    double los_exponent = 0.11;            // g2
    double min_elevation_deg = 15.0;       // theta0: LoS probability is 0 at or below

    void validate() const {
        check_positive(frequency_mhz, "environment.frequency_mhz");
        check_finite(mean_excess_los_db, "environment.mean_excess_los_db");
        check_finite(mean_excess_nlos_db, "environment.mean_excess_nlos_db");
        check_positive(sigma_scale_los_db, "environment.sigma_scale_los_db");
        check_positive(sigma_scale_nlos_db, "environment.sigma_scale_nlos_db");
        check_non_negative(sigma_decay_los, "environment.sigma_decay_los");
        check_non_negative(sigma_decay_nlos, "environment.sigma_decay_nlos");
        check_positive(los_coeff, "environment.los_coeff");
        check_non_negative(los_exponent, "environment.los_exponent");
        check_finite(min_elevation_deg, "environment.min_elevation_deg");
        if (min_elevation_deg < 0.0 || min_elevation_deg >= 90.0) {
            throw DomainError("environment.min_elevation_deg must lie in [0, 90)");
        }
        if (los_coeff * std::pow(90.0 - min_elevation_deg, los_exponent) > 1.0 + 1e-12) {
            throw DomainError(
                "environment LoS parameters must keep the LoS probability <= 1 at zenith");
        }
    }
};

/// Platform-to-ground geometry: altitude above the user plus ground range.
struct LinkGeometry {
    double altitude_m = 0.0;
    double ground_range_m = 0.0;

    double slant_distance_m() const {
        return std::sqrt(altitude_m * altitude_m + ground_range_m * ground_range_m);
    }

    /// Elevation of the platform as seen from the ground user, in (0, 90].
    double elevation_deg() const {
        return std::atan2(altitude_m, ground_range_m) * 180.0 / std::numbers::pi;
    }

    void validate() const {
        check_positive(altitude_m, "geometry.altitude_m");
        check_non_negative(ground_range_m, "geometry.ground_range_m");
    }
};

/// Free-space path loss [dB] for a distance in meters and frequency in MHz:
/// 20 log10(d) + 20 log10(f) - 27.55.
inline double free_space_path_loss_db(double distance_m, double frequency_mhz) {
    check_positive(distance_m, "distance_m");
    check_positive(frequency_mhz, "frequency_mhz");
    return 20.0 * std::log10(distance_m) + 20.0 * std::log10(frequency_mhz) - 27.55;
}

inline double free_space_path_loss_db(const LinkGeometry& geometry, double frequency_mhz) {
    geometry.validate();
    return free_space_path_loss_db(geometry.slant_distance_m(), frequency_mhz);
}

/// Probability of a line-of-sight link at the given elevation. Zero at and
/// below the minimum elevation (where the power-law form is undefined),
/// clamped into [0, 1] above it.
inline double los_probability(const ChannelEnvironment& env, double elevation_deg) {
    env.validate();
    check_finite(elevation_deg, "elevation_deg");
    if (elevation_deg <= env.min_elevation_deg) return 0.0;
    const double p =
        env.los_coeff * std::pow(elevation_deg - env.min_elevation_deg, env.los_exponent);
    return std::clamp(p, 0.0, 1.0);
}

enum class PropagationGroup { LineOfSight, NonLineOfSight };

/// Standard deviation of the excess loss for one propagation group [dB].
inline double excess_sigma_db(const ChannelEnvironment& env, PropagationGroup group,
                              double elevation_deg) {
    check_finite(elevation_deg, "elevation_deg");
    if (group == PropagationGroup::LineOfSight) {
        return env.sigma_scale_los_db * std::exp(-env.sigma_decay_los * elevation_deg);
    }
    return env.sigma_scale_nlos_db * std::exp(-env.sigma_decay_nlos * elevation_deg);
}

/// One excess-loss realisation [dB]: Bernoulli LoS/NLoS choice, then a
/// Gaussian draw for that group. Negative values (momentary gain over free
/// space) are possible; the Gaussian is not truncated.
inline double excess_loss_sample_db(const ChannelEnvironment& env, double elevation_deg,
                                    Rng& rng) {
    const double p_los = los_probability(env, elevation_deg);
    if (rng.uniform01() < p_los) {
        return rng.normal(env.mean_excess_los_db,
                          excess_sigma_db(env, PropagationGroup::LineOfSight, elevation_deg));
    }
    return rng.normal(env.mean_excess_nlos_db,
                      excess_sigma_db(env, PropagationGroup::NonLineOfSight, elevation_deg));
}

/// Expected excess loss [dB]: the LoS/NLoS means weighted by the LoS
/// probability. This is the reporting-side expectation of
/// excess_loss_sample_db; outage analysis keeps the per-sample draw.
inline double mean_excess_path_loss_db(const ChannelEnvironment& env, double elevation_deg) {
    const double p_los = los_probability(env, elevation_deg);
    return env.mean_excess_los_db * p_los + env.mean_excess_nlos_db * (1.0 - p_los);
}

inline double watts_to_dbm(double power_w) {
    check_positive(power_w, "power_w");
    return 10.0 * std::log10(power_w * 1000.0);
}

/// Received power [dBm] for one excess-loss realisation.
inline double received_power_dbm(double tx_power_dbm, const LinkGeometry& geometry,
                                 const ChannelEnvironment& env, double excess_db) {
    check_finite(tx_power_dbm, "tx_power_dbm");
    check_finite(excess_db, "excess_db");
    return tx_power_dbm - free_space_path_loss_db(geometry, env.frequency_mhz) - excess_db;
}

}  // namespace absim
