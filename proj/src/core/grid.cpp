#include "core/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "core/errors.hpp"

namespace sfwnav {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

OccupancyGrid::OccupancyGrid(double resolution, int width, int height, const Pose2D& origin)
    : resolution_(resolution), width_(width), height_(height), origin_(origin) {
  if (resolution <= 0.0) throw std::invalid_argument("grid resolution must be > 0");
  if (width <= 0 || height <= 0) throw std::invalid_argument("grid dimensions must be > 0");
  if (origin.theta != 0.0) throw std::invalid_argument("grid origin must be axis aligned");
  cells_.assign(static_cast<std::size_t>(width) * height, 0);
}

bool OccupancyGrid::in_bounds(const Vec2& p) const {
  int ix, iy;
  world_to_cell(p, ix, iy);
  return in_bounds(ix, iy);
}

bool OccupancyGrid::occupied(const Vec2& p) const {
  int ix, iy;
  world_to_cell(p, ix, iy);
  return occupied(ix, iy);
}

void OccupancyGrid::set_occupied(int ix, int iy, bool value) {
  if (!in_bounds(ix, iy)) return;
  cells_[static_cast<std::size_t>(iy) * width_ + ix] = value ? 1 : 0;
  finalized_ = false;
}

void OccupancyGrid::world_to_cell(const Vec2& p, int& ix, int& iy) const {
  ix = static_cast<int>(std::floor((p.x - origin_.x) / resolution_));
  iy = static_cast<int>(std::floor((p.y - origin_.y) / resolution_));
}

Vec2 OccupancyGrid::cell_center(int ix, int iy) const {
  return {origin_.x + (ix + 0.5) * resolution_, origin_.y + (iy + 0.5) * resolution_};
}

// Exact squared euclidean distance transform (two-pass lower-envelope scan)
// that also records, for every cell, which occupied cell realizes the
// minimum. Distances are in cell units. Columns without any occupied cell
// carry a large finite sentinel so the envelope stays well defined.
void OccupancyGrid::finalize() {
  const std::size_t n = cells_.size();
  site_x_.assign(n, -1);
  site_y_.assign(n, -1);

  constexpr double kBig = 1e18;
  std::vector<double> col_dist2(n, kBig);
  std::vector<std::int32_t> col_src(n, -1);

  // Pass 1: per column, 1D distance along y to the nearest occupied row.
  for (int x = 0; x < width_; ++x) {
    int last = -1;
    for (int y = 0; y < height_; ++y) {
      if (cells_[static_cast<std::size_t>(y) * width_ + x]) last = y;
      if (last >= 0) {
        const double d = static_cast<double>(y - last);
        col_dist2[static_cast<std::size_t>(y) * width_ + x] = d * d;
        col_src[static_cast<std::size_t>(y) * width_ + x] = last;
      }
    }
    last = -1;
    for (int y = height_ - 1; y >= 0; --y) {
      if (cells_[static_cast<std::size_t>(y) * width_ + x]) last = y;
      if (last >= 0) {
        const double d = static_cast<double>(last - y);
        const std::size_t i = static_cast<std::size_t>(y) * width_ + x;
        if (d * d < col_dist2[i]) {
          col_dist2[i] = d * d;
          col_src[i] = last;
        }
      }
    }
  }

  // Pass 2: per row, lower envelope of parabolas f(x) = col_dist2 + (x - x')^2.
  std::vector<int> v(width_);
  std::vector<double> z(static_cast<std::size_t>(width_) + 1);
  for (int y = 0; y < height_; ++y) {
    const std::size_t row = static_cast<std::size_t>(y) * width_;
    int k = 0;
    v[0] = 0;
    z[0] = -kInf;
    z[1] = kInf;
    for (int q = 1; q < width_; ++q) {
      double s;
      while (true) {
        const int p = v[k];
        s = ((col_dist2[row + q] + static_cast<double>(q) * q) -
             (col_dist2[row + p] + static_cast<double>(p) * p)) /
            (2.0 * q - 2.0 * p);
        if (s <= z[k] && k > 0) {
          --k;
        } else {
          break;
        }
      }
      ++k;
      v[k] = q;
      z[k] = s;
      z[k + 1] = kInf;
    }
    k = 0;
    for (int q = 0; q < width_; ++q) {
      while (z[k + 1] < q) ++k;
      const int p = v[k];
      if (col_src[row + p] >= 0) {
        site_x_[row + q] = p;
        site_y_[row + q] = col_src[row + p];
      }
    }
  }
  finalized_ = true;
}

void OccupancyGrid::require_finalized() const {
  if (!finalized_) throw StateError("OccupancyGrid: finalize() required before distance queries");
}

double OccupancyGrid::obstacle_clearance(const Vec2& p) const {
  require_finalized();
  int ix, iy;
  world_to_cell(p, ix, iy);
  if (!in_bounds(ix, iy)) return 0.0;
  if (occupied(ix, iy)) return 0.0;

  // Distance to the outside of the grid rectangle.
  const double xmin = origin_.x, ymin = origin_.y;
  const double xmax = origin_.x + width_ * resolution_;
  const double ymax = origin_.y + height_ * resolution_;
  double best = std::min(std::min(p.x - xmin, xmax - p.x), std::min(p.y - ymin, ymax - p.y));
  best = std::max(0.0, best);

  const std::size_t i = static_cast<std::size_t>(iy) * width_ + ix;
  if (site_x_[i] >= 0) {
    const Vec2 c = cell_center(site_x_[i], site_y_[i]);
    const double half_diag = 0.5 * resolution_ * std::sqrt(2.0);
    best = std::min(best, std::max(0.0, distance(p, c) - half_diag));
  }
  return best;
}

Vec2 OccupancyGrid::nearest_obstacle_point(const Vec2& p, bool* valid) const {
  require_finalized();
  if (valid) *valid = true;
  int ix, iy;
  world_to_cell(p, ix, iy);
  if (!in_bounds(ix, iy)) return p;

  const double xmin = origin_.x, ymin = origin_.y;
  const double xmax = origin_.x + width_ * resolution_;
  const double ymax = origin_.y + height_ * resolution_;
  // Projection of p onto the nearest boundary edge.
  double bd = p.x - xmin;
  Vec2 bp{xmin, p.y};
  if (xmax - p.x < bd) { bd = xmax - p.x; bp = {xmax, p.y}; }
  if (p.y - ymin < bd) { bd = p.y - ymin; bp = {p.x, ymin}; }
  if (ymax - p.y < bd) { bd = ymax - p.y; bp = {p.x, ymax}; }

  const std::size_t i = static_cast<std::size_t>(iy) * width_ + ix;
  if (site_x_[i] >= 0) {
    const Vec2 c = cell_center(site_x_[i], site_y_[i]);
    const double half = 0.5 * resolution_;
    // Closest point of the occupied cell square to p.
    const Vec2 cp{std::clamp(p.x, c.x - half, c.x + half), std::clamp(p.y, c.y - half, c.y + half)};
    if (distance(p, cp) < bd) return cp;
  }
  return bp;
}

double OccupancyGrid::raycast(const Vec2& ray_origin, double angle, double max_range) const {
  int ix, iy;
  world_to_cell(ray_origin, ix, iy);
  if (occupied(ix, iy)) return 0.0;

  const double dx = std::cos(angle);
  const double dy = std::sin(angle);

  // Amanatides-Woo traversal: visit every cell the ray crosses, in order.
  const int step_x = dx > 0 ? 1 : (dx < 0 ? -1 : 0);
  const int step_y = dy > 0 ? 1 : (dy < 0 ? -1 : 0);

  const double cell_x0 = origin_.x + ix * resolution_;
  const double cell_y0 = origin_.y + iy * resolution_;

  double t_max_x = kInf, t_max_y = kInf, t_delta_x = kInf, t_delta_y = kInf;
  if (step_x > 0) {
    t_max_x = (cell_x0 + resolution_ - ray_origin.x) / dx;
    t_delta_x = resolution_ / dx;
  } else if (step_x < 0) {
    t_max_x = (cell_x0 - ray_origin.x) / dx;
    t_delta_x = -resolution_ / dx;
  }
  if (step_y > 0) {
    t_max_y = (cell_y0 + resolution_ - ray_origin.y) / dy;
    t_delta_y = resolution_ / dy;
  } else if (step_y < 0) {
    t_max_y = (cell_y0 - ray_origin.y) / dy;
    t_delta_y = -resolution_ / dy;
  }

  double t = 0.0;
  while (t <= max_range) {
    if (t_max_x < t_max_y) {
      t = t_max_x;
      t_max_x += t_delta_x;
      ix += step_x;
    } else {
      t = t_max_y;
      t_max_y += t_delta_y;
      iy += step_y;
    }
    if (t > max_range) break;
    if (occupied(ix, iy)) return t;
  }
  return max_range;
}

double OccupancyGrid::min_obstacle_distance(const Vec2& p, double lidar_max, int n_rays) const {
  double best = lidar_max;
  for (int k = 0; k < n_rays; ++k) {
    const double a = (2.0 * kPi * k) / n_rays;
    best = std::min(best, raycast(p, a, lidar_max));
  }
  return best;
}

std::uint64_t OccupancyGrid::occupancy_hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto c : cells_) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace sfwnav
