#include "nav/global_planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>

#include "core/errors.hpp"

namespace sfwnav {

namespace {

constexpr double kSqrt2 = 1.41421356237309514547462185873883;

struct OpenEntry {
  double f;
  std::uint64_t order;  // FIFO among equal f for deterministic expansion
  int cell;
  bool operator>(const OpenEntry& o) const {
    if (f != o.f) return f > o.f;
    return order > o.order;
  }
};

double octile(int dx, int dy) {
  dx = std::abs(dx);
  dy = std::abs(dy);
  const int lo = std::min(dx, dy);
  const int hi = std::max(dx, dy);
  return (hi - lo) + kSqrt2 * lo;
}

}  // namespace

GlobalPath plan_global(const OccupancyGrid& grid, const Vec2& start, const Vec2& goal,
                       const GlobalPlannerParams& params) {
  const int w = grid.width();
  const int h = grid.height();

  auto blocked = [&](int ix, int iy) {
    if (!grid.in_bounds(ix, iy)) return true;
    if (grid.occupied(ix, iy)) return true;
    return grid.obstacle_clearance(grid.cell_center(ix, iy)) < params.inflation_radius;
  };

  int sx, sy, gx, gy;
  grid.world_to_cell(start, sx, sy);
  grid.world_to_cell(goal, gx, gy);
  if (blocked(sx, sy)) throw UnreachableError("global plan: start cell blocked or inflated");
  if (blocked(gx, gy)) throw UnreachableError("global plan: goal cell blocked or inflated");

  const int n = w * h;
  std::vector<double> g(n, std::numeric_limits<double>::infinity());
  std::vector<int> parent(n, -1);
  std::vector<std::uint8_t> closed(n, 0);

  const int start_idx = sy * w + sx;
  const int goal_idx = gy * w + gx;

  std::priority_queue<OpenEntry, std::vector<OpenEntry>, std::greater<OpenEntry>> open;
  std::uint64_t order = 0;
  g[start_idx] = 0.0;
  open.push({octile(gx - sx, gy - sy), order++, start_idx});

  static const int kDx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
  static const int kDy[8] = {0, 0, 1, -1, 1, -1, 1, -1};

  bool found = false;
  while (!open.empty()) {
    const OpenEntry top = open.top();
    open.pop();
    const int cur = top.cell;
    if (closed[cur]) continue;
    closed[cur] = 1;
    if (cur == goal_idx) {
      found = true;
      break;
    }
    const int cx = cur % w;
    const int cy = cur / w;
    for (int k = 0; k < 8; ++k) {
      const int nx = cx + kDx[k];
      const int ny = cy + kDy[k];
      if (blocked(nx, ny)) continue;
      // No corner cutting: a diagonal move needs both cardinals free.
      if (kDx[k] != 0 && kDy[k] != 0 && (blocked(cx + kDx[k], cy) || blocked(cx, cy + kDy[k])))
        continue;
      const int ni = ny * w + nx;
      if (closed[ni]) continue;
      const double step = (kDx[k] != 0 && kDy[k] != 0) ? kSqrt2 : 1.0;
      const double ng = g[cur] + step;
      if (ng < g[ni]) {
        g[ni] = ng;
        parent[ni] = cur;
        open.push({ng + octile(gx - nx, gy - ny), order++, ni});
      }
    }
  }
  if (!found) throw UnreachableError("global plan: goal unreachable from start");

  std::vector<int> cells;
  for (int c = goal_idx; c != -1; c = parent[c]) cells.push_back(c);
  std::reverse(cells.begin(), cells.end());

  long n_straight = 0, n_diag = 0;
  for (std::size_t i = 1; i < cells.size(); ++i) {
    const int dx = cells[i] % w - cells[i - 1] % w;
    const int dy = cells[i] / w - cells[i - 1] / w;
    if (dx != 0 && dy != 0) {
      ++n_diag;
    } else {
      ++n_straight;
    }
  }

  GlobalPath path;
  path.n_straight = n_straight;
  path.n_diag = n_diag;
  path.waypoints.reserve(cells.size());
  // Exact start and goal replace their cell centers so the polyline never
  // doubles back inside the endpoint cells.
  path.waypoints.push_back(start);
  for (std::size_t i = 1; i + 1 < cells.size(); ++i)
    path.waypoints.push_back(grid.cell_center(cells[i] % w, cells[i] / w));
  if (distance(path.waypoints.back(), goal) > 1e-12) {
    path.waypoints.push_back(goal);
  }
  double length = 0.0;
  for (std::size_t i = 1; i < path.waypoints.size(); ++i)
    length += distance(path.waypoints[i - 1], path.waypoints[i]);
  path.total_length = length;
  return path;
}

double path_arc_length_at(const GlobalPath& path, const Vec2& p) {
  const auto& wp = path.waypoints;
  if (wp.size() < 2) return 0.0;

  double best_d2 = std::numeric_limits<double>::infinity();
  double best_s = 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < wp.size(); ++i) {
    const Vec2 a = wp[i];
    const Vec2 b = wp[i + 1];
    const Vec2 ab = b - a;
    const double len2 = ab.squared_norm();
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    const Vec2 proj = a + ab * t;
    const double d2 = (p - proj).squared_norm();
    const double seg_len = std::sqrt(len2);
    if (d2 < best_d2) {
      best_d2 = d2;
      best_s = s + t * seg_len;
    }
    s += seg_len;
  }
  return best_s;
}

Vec2 local_waypoint(const GlobalPath& path, const Pose2D& robot, double lookahead) {
  const auto& wp = path.waypoints;
  if (wp.empty()) throw std::invalid_argument("local_waypoint: empty path");
  if (wp.size() == 1) return wp.front();

  const double s_star = path_arc_length_at(path, robot.position());
  const double target = s_star + lookahead;

  double s = 0.0;
  for (std::size_t i = 0; i + 1 < wp.size(); ++i) {
    const double seg_len = distance(wp[i], wp[i + 1]);
    if (s + seg_len >= target && seg_len > 0.0) {
      const double t = (target - s) / seg_len;
      return wp[i] + (wp[i + 1] - wp[i]) * t;
    }
    s += seg_len;
  }
  return wp.back();  // less than lookahead of path remains: local = final goal
}

}  // namespace sfwnav
