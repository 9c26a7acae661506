#pragma once

#include <numbers>

namespace srlplan {

// Standard gravitational acceleration, m/s^2.
inline constexpr double kStandardGravity = 9.80665;

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace srlplan
