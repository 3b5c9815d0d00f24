#pragma once

#include <cmath>
#include <numbers>

namespace hexfluid {

inline constexpr double kPi = std::numbers::pi;

constexpr double deg2rad(double deg) { return deg * (kPi / 180.0); }
constexpr double rad2deg(double rad) { return rad * (180.0 / kPi); }

// Wrap to (-pi, pi]; a tie at the branch cut resolves to +pi.
inline double wrap_pi(double a) {
  double w = std::remainder(a, 2.0 * kPi);
  if (w <= -kPi) w = kPi;
  return w;
}

inline double db_to_linear(double db) { return std::exp(db * (std::numbers::ln10 / 10.0)); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

}  // namespace hexfluid
