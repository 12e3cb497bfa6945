#ifndef SFWNAV_CONTROL_SFW_CONTROLLER_HPP_
#define SFWNAV_CONTROL_SFW_CONTROLLER_HPP_

#include <limits>
#include <vector>

#include "core/grid.hpp"
#include "core/pose.hpp"
#include "core/vec2.hpp"
#include "sfm/sfm.hpp"

namespace sfwnav {

/// The five trajectory-cost weights; both the planner's knobs and the
/// adaptive agent's action.
struct CostWeights {
  double w_s = 2.0;  // social work
  double w_o = 2.0;  // costmap / inflation
  double w_v = 0.8;  // velocity
  double w_d = 1.0;  // distance to local waypoint
  double w_h = 0.6;  // heading to local waypoint

  /// Static profile with the social term removed (the classic-DWA baseline).
  static CostWeights dwa_baseline() { return {0.0, 2.0, 0.8, 1.0, 0.6}; }
};

struct ControllerParams {
  double v_max = 0.6;                 // [m/s]
  double v_min = 0.08;                // [m/s]
  double w_max = 1.5;                 // [rad/s]
  double sim_time = 2.5;              // [s] rollout horizon
  double rollout_dt = 0.1;            // [s] rollout sampling step
  double waypoint_lookahead = 2.0;    // [m]
  double accel_v = 1.0;               // [m/s^2]
  double accel_w = 2.0;               // [rad/s^2]
  double control_dt = 0.1;            // [s] controller period (10 Hz)
  double window_dt = 0.5;             // [s] accel horizon for the window
  int n_v_samples = 10;
  int n_w_samples = 20;
  double robot_radius = 0.25;         // [m]
  double inflation_falloff = 0.55;    // [m] clearance where C_o reaches 0
  double s_norm = 50.0;               // social-work normalization constant
  double obstacle_force_range = 3.0;  // [m] obstacles beyond this exert no force
  bool social_term_enabled = true;    // false: the social-term-deleted build
};

/// Pedestrian as the controller sees it for one selection cycle.
struct PedestrianSnapshot {
  Vec2 position;
  Vec2 velocity;
  double radius = 0.35;
};

/// Immutable world view used to score a full window of candidates.
struct WorldSnapshot {
  const OccupancyGrid* grid = nullptr;
  std::vector<PedestrianSnapshot> pedestrians;
  Vec2 local_waypoint;
  SfmParams sfm;
};

struct TrajectoryCosts {
  double c_s = 0.0;
  double c_o = 0.0;
  double c_v = 0.0;
  double c_d = 0.0;
  double c_h = 0.0;
};

struct Trajectory {
  VelocityCommand command;
  std::vector<Pose2D> poses;
  TrajectoryCosts costs;
  double total = std::numeric_limits<double>::infinity();
  bool feasible = false;
};

struct SelectionResult {
  VelocityCommand command;
  bool recovery = false;    // true when every candidate was infeasible
  int best_index = -1;      // index into trajectories, -1 on recovery
  std::vector<Trajectory> trajectories;
};

/// Reachable command set: an n_v x n_w uniform grid (endpoints included)
/// over the accel-limited window around current, clipped to the kinematic
/// limits. dt < 0 uses params.window_dt.
std::vector<VelocityCommand> dynamic_window(const VelocityCommand& current,
                                            const ControllerParams& p, double dt = -1.0);

/// Constant-command arc sampled every rollout_dt over sim_time, start pose
/// included (closed-form integration, |w| < 1e-6 degrades to a straight line).
std::vector<Pose2D> rollout(const VelocityCommand& cmd, const Pose2D& start,
                            const ControllerParams& p);

/// Evaluates the five normalized cost terms over the rollout and combines
/// them with the weights. Collisions with the grid or with constant-velocity
/// pedestrian predictions mark the trajectory infeasible (total = +inf).
Trajectory score_trajectory(std::vector<Pose2D> poses, const VelocityCommand& cmd,
                            const WorldSnapshot& snapshot, const CostWeights& weights,
                            const ControllerParams& p);

/// Scores the whole window from start and returns the argmin-feasible
/// command; ties break toward higher v, then smaller |w|, then sample order.
/// With no feasible candidate the fixed rotate-in-place recovery command is
/// returned.
SelectionResult select_command(const std::vector<VelocityCommand>& window, const Pose2D& start,
                               const WorldSnapshot& snapshot, const CostWeights& weights,
                               const ControllerParams& p);

/// Recovery command used when every sampled trajectory is infeasible.
inline VelocityCommand recovery_command(const ControllerParams& p) {
  return {0.0, 0.5 * p.w_max};
}

}  // namespace sfwnav

#endif
