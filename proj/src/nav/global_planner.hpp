#ifndef SFWNAV_NAV_GLOBAL_PLANNER_HPP_
#define SFWNAV_NAV_GLOBAL_PLANNER_HPP_

#include <vector>

#include "core/grid.hpp"
#include "core/pose.hpp"
#include "core/vec2.hpp"

namespace sfwnav {

/// Dense polyline from start to goal; consecutive waypoints are at most one
/// cell diagonal apart (plus sub-cell slack at the exact endpoints).
/// total_length is the polyline length; n_straight/n_diag are the grid step
/// counts of the underlying cell path, which determine the search cost
/// n_straight + sqrt(2) * n_diag uniquely.
struct GlobalPath {
  std::vector<Vec2> waypoints;
  double total_length = 0.0;
  long n_straight = 0;
  long n_diag = 0;
};

struct GlobalPlannerParams {
  double inflation_radius = 0.30;  // robot radius 0.25 m + 0.05 m margin
};

/// 8-connected A* over the inflated grid (unit straight, sqrt(2) diagonal,
/// octile heuristic, no corner cutting). Deterministic tie-breaking by
/// expansion order. Throws UnreachableError when no path exists or either
/// endpoint lies in an inflated cell.
GlobalPath plan_global(const OccupancyGrid& grid, const Vec2& start, const Vec2& goal,
                       const GlobalPlannerParams& params = {});

/// Point at arc length (s* + lookahead) along the path, where s* is the arc
/// length of the path point nearest to robot. Returns the final goal when
/// less than lookahead of path remains.
Vec2 local_waypoint(const GlobalPath& path, const Pose2D& robot, double lookahead = 2.0);

/// Arc length of the path point nearest to p (projection onto segments).
double path_arc_length_at(const GlobalPath& path, const Vec2& p);

}  // namespace sfwnav

#endif
