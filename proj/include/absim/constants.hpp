#pragma once

namespace absim::constants {

/// Gravitational acceleration [m/s^2] used to turn masses into weights.
inline constexpr double kGravityMps2 = 9.8;

inline constexpr double kHoursPerDay = 24.0;

inline constexpr double kWhPerKwh = 1000.0;

inline constexpr double kSquareMetersPerSquareKm = 1.0e6;

}  // namespace absim::constants
