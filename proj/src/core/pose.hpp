#ifndef SFWNAV_CORE_POSE_HPP_
#define SFWNAV_CORE_POSE_HPP_

#include "core/angles.hpp"
#include "core/vec2.hpp"

namespace sfwnav {

/// Planar robot configuration. theta is kept in (-pi, pi].
struct Pose2D {
  double x = 0.0;      // [m]
  double y = 0.0;      // [m]
  double theta = 0.0;  // [rad], (-pi, pi]

  Pose2D() = default;
  Pose2D(double x_, double y_, double theta_) : x(x_), y(y_), theta(normalize_angle(theta_)) {}

  Vec2 position() const { return {x, y}; }
  Vec2 heading() const { return {std::cos(theta), std::sin(theta)}; }
};

/// Differential-drive control: forward speed v and yaw rate w.
struct VelocityCommand {
  double v = 0.0;  // [m/s]
  double w = 0.0;  // [rad/s]

  bool operator==(const VelocityCommand& o) const { return v == o.v && w == o.w; }
};

}  // namespace sfwnav

#endif
