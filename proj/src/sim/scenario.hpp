#ifndef SFWNAV_SIM_SCENARIO_HPP_
#define SFWNAV_SIM_SCENARIO_HPP_

#include <memory>
#include <string>
#include <vector>

#include "core/grid.hpp"
#include "core/pose.hpp"
#include "core/vec2.hpp"
#include "sfm/sfm.hpp"

namespace sfwnav {

struct RectObstacle {
  double x, y, w, h;  // axis-aligned, meters
};

struct PedestrianSpec {
  Vec2 start;
  std::vector<Vec2> waypoints;  // empty: static person
  double desired_speed = 0.9;
  double radius = 0.35;
  bool loop = false;
};

/// One navigation episode description, as parsed from the scenario text
/// format (see the README for the grammar).
struct Scenario {
  std::string name;
  Vec2 bounds_origin;       // lower-left corner of the world rectangle
  double bounds_w = 0.0;    // [m]
  double bounds_h = 0.0;    // [m]
  double resolution = 0.05; // [m/cell]
  std::vector<RectObstacle> rects;
  std::vector<std::vector<Vec2>> polylines;
  Pose2D robot_start;
  Vec2 goal;
  std::vector<PedestrianSpec> pedestrians;
  double max_duration = 60.0;  // [s]
  SfmParams sfm;
};

/// Parses the strict section/key scenario format. Unknown sections or keys,
/// missing required fields and malformed numbers raise ParseError with the
/// offending line number.
Scenario parse_scenario(const std::string& text);

/// Rasterizes the scenario obstacles into a finalized occupancy grid and
/// validates that the robot start, goal and every pedestrian start lie in
/// free space. Throws ParseError on validation failure.
std::shared_ptr<const OccupancyGrid> rasterize_scenario(const Scenario& scenario,
                                                        double robot_radius = 0.25);

/// parse + rasterize in one call.
std::pair<Scenario, std::shared_ptr<const OccupancyGrid>> load_scenario(const std::string& text);

/// Deterministic per-seed perturbation of start poses and pedestrian speeds,
/// which is what makes repeated seeded runs of one scenario distinct.
struct JitterParams {
  double pedestrian_pos = 0.15;   // [m], uniform, each axis
  double pedestrian_speed = 0.1;  // relative
  double robot_pos = 0.05;        // [m]
  double robot_theta = 0.05;      // [rad]
};

Scenario apply_jitter(const Scenario& scenario, std::uint64_t seed, const JitterParams& jitter);

}  // namespace sfwnav

#endif
