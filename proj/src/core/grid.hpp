#ifndef SFWNAV_CORE_GRID_HPP_
#define SFWNAV_CORE_GRID_HPP_

#include <cstdint>
#include <vector>

#include "core/pose.hpp"
#include "core/vec2.hpp"

namespace sfwnav {

/// Binary occupancy grid with axis-aligned origin (origin.theta == 0).
/// Out-of-bounds cells are treated as occupied, and the area outside the grid
/// rectangle counts as obstacle for clearance queries. After mutation call
/// finalize() to rebuild the internal distance field.
class OccupancyGrid {
 public:
  OccupancyGrid(double resolution, int width, int height, const Pose2D& origin);

  double resolution() const { return resolution_; }
  int width() const { return width_; }
  int height() const { return height_; }
  const Pose2D& origin() const { return origin_; }

  bool in_bounds(int ix, int iy) const {
    return ix >= 0 && iy >= 0 && ix < width_ && iy < height_;
  }
  bool in_bounds(const Vec2& p) const;

  /// Occupancy with the out-of-bounds-is-occupied rule.
  bool occupied(int ix, int iy) const {
    if (!in_bounds(ix, iy)) return true;
    return cells_[static_cast<std::size_t>(iy) * width_ + ix] != 0;
  }
  bool occupied(const Vec2& p) const;

  void set_occupied(int ix, int iy, bool value = true);

  /// World point -> containing cell indices (no bounds check).
  void world_to_cell(const Vec2& p, int& ix, int& iy) const;
  /// Center of cell (ix, iy) in world coordinates.
  Vec2 cell_center(int ix, int iy) const;

  /// Rebuilds the euclidean distance field; must be called after mutations.
  void finalize();
  bool finalized() const { return finalized_; }

  /// Conservative distance from p to the nearest obstacle region (occupied
  /// cell square or grid boundary), in meters. Zero when p is inside an
  /// occupied cell or outside the grid.
  double obstacle_clearance(const Vec2& p) const;

  /// Representative point of the obstacle nearest to p. valid is set to false
  /// when the grid is completely free and unbounded influence is meaningless
  /// (never happens here since the boundary always exists).
  Vec2 nearest_obstacle_point(const Vec2& p, bool* valid = nullptr) const;

  /// Distance along the ray (origin + t * [cos a, sin a]) to the first
  /// occupied cell, clamped to max_range. Returns 0 when the origin cell is
  /// occupied or out of bounds.
  double raycast(const Vec2& ray_origin, double angle, double max_range) const;

  /// Minimum of a 36-ray scan around p (10 degree spacing, world frame),
  /// clamped at lidar_max. This is the LiDAR-style reduction, not the exact
  /// distance field.
  double min_obstacle_distance(const Vec2& p, double lidar_max = 3.0, int n_rays = 36) const;

  std::size_t cell_count() const { return cells_.size(); }
  std::uint64_t occupancy_hash() const;

 private:
  void require_finalized() const;

  double resolution_;
  int width_;
  int height_;
  Pose2D origin_;
  std::vector<std::uint8_t> cells_;
  bool finalized_ = false;

  // Per-cell nearest occupied cell (index pair packed), -1 when the grid has
  // no occupied cells at all.
  std::vector<std::int32_t> site_x_;
  std::vector<std::int32_t> site_y_;
};

}  // namespace sfwnav

#endif
