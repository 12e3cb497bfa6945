#ifndef SFWNAV_CORE_ANGLES_HPP_
#define SFWNAV_CORE_ANGLES_HPP_

#include <cmath>
#include <stdexcept>

namespace sfwnav {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Wraps an angle into (-pi, pi]. Throws std::invalid_argument on non-finite input.
inline double normalize_angle(double a) {
  if (!std::isfinite(a)) {
    throw std::invalid_argument("normalize_angle: non-finite angle");
  }
  double r = std::fmod(a, kTwoPi);
  if (r <= -kPi) {
    r += kTwoPi;
  } else if (r > kPi) {
    r -= kTwoPi;
  }
  return r;
}

/// Signed difference a - b wrapped into (-pi, pi].
inline double angle_diff(double a, double b) { return normalize_angle(a - b); }

}  // namespace sfwnav

#endif
