#ifndef SFWNAV_CORE_VEC2_HPP_
#define SFWNAV_CORE_VEC2_HPP_

#include <cmath>

namespace sfwnav {

/// Plain 2D vector used for positions, velocities and forces (meters, m/s, m/s^2).
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
  Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double squared_norm() const { return x * x + y * y; }
  double norm() const { return std::sqrt(squared_norm()); }
  double angle() const { return std::atan2(y, x); }

  /// Unit vector; returns (0, 0) for vectors shorter than eps.
  Vec2 normalized(double eps = 1e-12) const {
    const double n = norm();
    return n < eps ? Vec2{0.0, 0.0} : Vec2{x / n, y / n};
  }

  /// 90-degree counter-clockwise rotation.
  Vec2 left_normal() const { return {-y, x}; }

  Vec2 rotated(double a) const {
    const double c = std::cos(a), s = std::sin(a);
    return {c * x - s * y, s * x + c * y};
  }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

}  // namespace sfwnav

#endif
