#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "absim/channel.hpp"
#include "absim/errors.hpp"
#include "absim/rng.hpp"

namespace absim {

/// Monte Carlo controls for the coverage-radius search.
struct CoverageSearch {
    double reliability = 0.99;       // required fraction of samples above sensitivity
    int samples_per_radius = 10000;
    std::uint64_t seed = 42;
    double radius_step_m = 1.0;

    void validate() const {
        check_finite(reliability, "search.reliability");
        if (reliability <= 0.0 || reliability >= 1.0) {
            throw DomainError("search.reliability must lie in (0, 1)");
        }
        if (samples_per_radius < 1) throw DomainError("search.samples_per_radius must be >= 1");
        check_positive(radius_step_m, "search.radius_step_m");
    }
};

struct CoverageResult {
    double radius_m = 0.0;
    double outage_at_radius = 1.0;  // empirical outage at radius_m
    bool covered = false;           // false when even the nadir misses reliability
    int samples_per_point = 0;
    std::uint64_t seed = 0;
};

/// Largest ground range at which the empirical fraction of excess-loss
/// realisations with received power above the sensitivity exceeds the
/// reliability target.
///
/// Ground ranges are scanned outward in fixed steps from the nadir up to
/// the range where the elevation drops to the environment's minimum (the
/// LoS model is undefined below it). Each radius gets an independent
/// substream derived from (seed, radius index), so the result is identical
/// whether radii are evaluated serially or in parallel, and the scan keeps
/// the largest compliant radius rather than stopping at the first miss:
/// empirical reliability is noisy, not strictly monotone sample-to-sample.
inline CoverageResult coverage_radius(double tx_power_w, double rx_sensitivity_dbm,
                                      double altitude_m, const ChannelEnvironment& env,
                                      const CoverageSearch& search = {}) {
    env.validate();
    search.validate();
    check_positive(altitude_m, "altitude_m");
    check_finite(rx_sensitivity_dbm, "rx_sensitivity_dbm");
    const double tx_dbm = watts_to_dbm(tx_power_w);
    if (env.min_elevation_deg <= 0.0) {
        throw DomainError("coverage search needs environment.min_elevation_deg > 0");
    }
    const double max_range_m =
        altitude_m / std::tan(env.min_elevation_deg * std::numbers::pi / 180.0);

    CoverageResult result;
    result.samples_per_point = search.samples_per_radius;
    result.seed = search.seed;

    const int n = search.samples_per_radius;
    const std::uint64_t steps = static_cast<std::uint64_t>(max_range_m / search.radius_step_m);
    for (std::uint64_t i = 0; i <= steps; ++i) {
        const double range_m = static_cast<double>(i) * search.radius_step_m;
        const LinkGeometry geometry{altitude_m, range_m};
        const double elevation = geometry.elevation_deg();
        if (elevation <= env.min_elevation_deg) break;

        const double p_los = los_probability(env, elevation);
        const double sigma_los = excess_sigma_db(env, PropagationGroup::LineOfSight, elevation);
        const double sigma_nlos =
            excess_sigma_db(env, PropagationGroup::NonLineOfSight, elevation);
        // Pass iff excess < tx - FSPL - sensitivity.
        const double excess_margin_db =
            tx_dbm - free_space_path_loss_db(geometry, env.frequency_mhz) - rx_sensitivity_dbm;

        Rng rng = Rng::substream(search.seed, i);
        int passes = 0;
        for (int k = 0; k < n; ++k) {
            const bool los = rng.uniform01() < p_los;
            const double excess = los ? rng.normal(env.mean_excess_los_db, sigma_los)
                                      : rng.normal(env.mean_excess_nlos_db, sigma_nlos);
            if (excess < excess_margin_db) ++passes;
        }
        if (static_cast<double>(passes) > search.reliability * static_cast<double>(n)) {
            result.covered = true;
            result.radius_m = range_m;
            result.outage_at_radius = 1.0 - static_cast<double>(passes) / static_cast<double>(n);
        }
    }
    return result;
}

}  // namespace absim
