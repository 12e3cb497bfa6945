#ifndef SFWNAV_SIM_WORLD_HPP_
#define SFWNAV_SIM_WORLD_HPP_

#include <array>
#include <memory>
#include <vector>

#include "sim/scenario.hpp"

namespace sfwnav {

enum class EpisodeStatus { kRunning, kSuccess, kCollision, kTimeout };

const char* to_string(EpisodeStatus s);

struct SimParams {
  double dt = 0.05;            // physics step [s] (20 Hz)
  double robot_radius = 0.25;  // [m]
  double goal_tolerance = 0.3; // [m]
  double lidar_max = 3.0;      // [m]
  int lidar_rays = 36;
};

/// Deterministic episode engine: differential-drive robot, SFM pedestrians,
/// LiDAR simulation and terminal-condition detection. Terminal states are
/// absorbing; step() on a terminal world throws StateError.
class World {
 public:
  World(const Scenario& scenario, std::shared_ptr<const OccupancyGrid> grid,
        const SimParams& params = {});

  /// Integrates one physics step under cmd (clamped to the kinematic
  /// limits), steps the pedestrians and updates the episode status.
  void step(const VelocityCommand& cmd, double v_max = 0.6, double w_max = 1.5);

  /// 36 evenly spaced ranges in the robot frame (beam 0 = heading), each the
  /// nearer of the static-grid raycast and pedestrian disc intersections,
  /// clamped to lidar_max. Pedestrians are visible to the LiDAR.
  std::vector<double> scan() const;

  /// Surface distance (centers minus radii) to the closest pedestrian;
  /// +infinity with no pedestrians.
  double min_pedestrian_surface_distance() const;
  /// Center distance to the closest pedestrian; +infinity with no pedestrians.
  double min_pedestrian_center_distance() const;

  /// Robot viewed as a force-model agent (for social-work bookkeeping and
  /// for the pedestrians' robot-as-obstacle term).
  SfmAgent robot_agent() const;

  double time() const { return time_; }
  EpisodeStatus status() const { return status_; }
  bool running() const { return status_ == EpisodeStatus::kRunning; }
  const Pose2D& robot() const { return robot_; }
  const VelocityCommand& command() const { return cmd_; }
  const std::vector<Pedestrian>& pedestrians() const { return pedestrians_; }
  const OccupancyGrid& grid() const { return *grid_; }
  const Scenario& scenario() const { return scenario_; }
  const SimParams& params() const { return params_; }
  const Vec2& goal() const { return scenario_.goal; }

 private:
  void update_status();

  Scenario scenario_;
  std::shared_ptr<const OccupancyGrid> grid_;
  SimParams params_;
  double time_ = 0.0;
  Pose2D robot_;
  VelocityCommand cmd_;
  std::vector<Pedestrian> pedestrians_;
  EpisodeStatus status_ = EpisodeStatus::kRunning;
};

}  // namespace sfwnav

#endif
