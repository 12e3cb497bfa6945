#include "control/sfw_controller.hpp"

#include <algorithm>
#include <cmath>

#include "core/angles.hpp"

namespace sfwnav {

std::vector<VelocityCommand> dynamic_window(const VelocityCommand& current,
                                            const ControllerParams& p, double dt) {
  if (dt < 0.0) dt = p.window_dt;
  const double v_lo = std::max(p.v_min, current.v - p.accel_v * dt);
  const double v_hi = std::min(p.v_max, current.v + p.accel_v * dt);
  const double w_lo = std::max(-p.w_max, current.w - p.accel_w * dt);
  const double w_hi = std::min(p.w_max, current.w + p.accel_w * dt);

  const int nv = std::max(1, p.n_v_samples);
  const int nw = std::max(1, p.n_w_samples);

  std::vector<VelocityCommand> window;
  window.reserve(static_cast<std::size_t>(nv) * nw);
  for (int i = 0; i < nv; ++i) {
    const double v = nv > 1 ? v_lo + (v_hi - v_lo) * i / (nv - 1) : v_lo;
    for (int j = 0; j < nw; ++j) {
      const double w = nw > 1 ? w_lo + (w_hi - w_lo) * j / (nw - 1) : w_lo;
      window.push_back({v, w});
    }
  }
  return window;
}

std::vector<Pose2D> rollout(const VelocityCommand& cmd, const Pose2D& start,
                            const ControllerParams& p) {
  const int n = std::max(1, static_cast<int>(std::lround(p.sim_time / p.rollout_dt)));
  std::vector<Pose2D> poses;
  poses.reserve(n + 1);
  poses.push_back(start);

  const bool straight = std::abs(cmd.w) < 1e-6;
  for (int k = 1; k <= n; ++k) {
    const double t = k * p.rollout_dt;
    Pose2D q;
    if (straight) {
      q.x = start.x + cmd.v * t * std::cos(start.theta);
      q.y = start.y + cmd.v * t * std::sin(start.theta);
      q.theta = start.theta;
    } else {
      const double th = start.theta + cmd.w * t;
      const double r = cmd.v / cmd.w;
      q.x = start.x + r * (std::sin(th) - std::sin(start.theta));
      q.y = start.y - r * (std::cos(th) - std::cos(start.theta));
      q.theta = normalize_angle(th);
    }
    poses.push_back(q);
  }
  return poses;
}

Trajectory score_trajectory(std::vector<Pose2D> poses, const VelocityCommand& cmd,
                            const WorldSnapshot& snapshot, const CostWeights& weights,
                            const ControllerParams& p) {
  Trajectory traj;
  traj.command = cmd;
  traj.poses = std::move(poses);

  const OccupancyGrid& grid = *snapshot.grid;
  const auto& peds = snapshot.pedestrians;

  // Obstacle term and feasibility: worst inflation cost over the rollout,
  // with grid cells and predicted pedestrian discs both acting as obstacles.
  double c_o = 0.0;
  bool feasible = true;
  for (std::size_t k = 0; k < traj.poses.size(); ++k) {
    const double t = k * p.rollout_dt;
    const Vec2 pos = traj.poses[k].position();

    double clearance = grid.obstacle_clearance(pos) - p.robot_radius;
    for (const auto& ped : peds) {
      const Vec2 predicted = ped.position + ped.velocity * t;
      clearance = std::min(clearance, distance(pos, predicted) - ped.radius - p.robot_radius);
    }
    if (clearance <= 0.0) {
      feasible = false;
      break;
    }
    c_o = std::max(c_o, std::max(0.0, 1.0 - clearance / p.inflation_falloff));
  }

  if (!feasible) {
    traj.feasible = false;
    traj.total = std::numeric_limits<double>::infinity();
    return traj;
  }

  const Pose2D& end = traj.poses.back();
  const Vec2 to_wp = snapshot.local_waypoint - end.position();
  const double wp_dist = to_wp.norm();

  TrajectoryCosts c;
  c.c_o = std::min(1.0, c_o);
  c.c_v = (p.v_max - cmd.v) / p.v_max;
  c.c_d = std::min(1.0, wp_dist / p.waypoint_lookahead);
  c.c_h = wp_dist < 1e-9 ? 0.0 : std::abs(angle_diff(to_wp.angle(), end.theta)) / kPi;

  if (p.social_term_enabled) {
    // Social work of the rollout (Eq.-style bookkeeping): per sample, the
    // moduli of the robot's social and obstacle forces plus the moduli of
    // the forces the robot induces on each pedestrian.
    double raw = 0.0;
    SfmAgent robot;
    robot.radius = p.robot_radius;
    robot.desired_speed = p.v_max;
    for (std::size_t k = 0; k < traj.poses.size(); ++k) {
      const double t = k * p.rollout_dt;
      robot.position = traj.poses[k].position();
      robot.velocity = traj.poses[k].heading() * cmd.v;

      Vec2 social{0.0, 0.0};
      for (const auto& ped : peds) {
        SfmAgent other;
        other.position = ped.position + ped.velocity * t;
        other.velocity = ped.velocity;
        other.radius = ped.radius;
        social += social_force_between(robot, other, snapshot.sfm);
        raw += social_force_between(other, robot, snapshot.sfm).norm();
      }
      raw += social.norm();

      // Obstacles only act within perception range (the LiDAR saturation).
      if (grid.obstacle_clearance(robot.position) <= p.obstacle_force_range) {
        bool valid = false;
        const Vec2 obs = grid.nearest_obstacle_point(robot.position, &valid);
        if (valid) raw += obstacle_force(robot, obs, snapshot.sfm).norm();
      }
    }
    c.c_s = std::min(1.0, raw / p.s_norm);
  }

  traj.costs = c;
  traj.feasible = true;
  traj.total = c.c_s * weights.w_s + c.c_o * weights.w_o + c.c_v * weights.w_v +
               c.c_d * weights.w_d + c.c_h * weights.w_h;
  return traj;
}

SelectionResult select_command(const std::vector<VelocityCommand>& window, const Pose2D& start,
                               const WorldSnapshot& snapshot, const CostWeights& weights,
                               const ControllerParams& p) {
  SelectionResult result;
  result.trajectories.reserve(window.size());

  int best = -1;
  for (std::size_t i = 0; i < window.size(); ++i) {
    Trajectory traj =
        score_trajectory(rollout(window[i], start, p), window[i], snapshot, weights, p);
    if (traj.feasible) {
      if (best < 0) {
        best = static_cast<int>(i);
      } else {
        const Trajectory& b = result.trajectories[best];
        if (traj.total < b.total ||
            (traj.total == b.total &&
             (traj.command.v > b.command.v ||
              (traj.command.v == b.command.v && std::abs(traj.command.w) < std::abs(b.command.w))))) {
          best = static_cast<int>(i);
        }
      }
    }
    result.trajectories.push_back(std::move(traj));
  }

  if (best < 0) {
    result.command = recovery_command(p);
    result.recovery = true;
    result.best_index = -1;
  } else {
    result.command = result.trajectories[best].command;
    result.recovery = false;
    result.best_index = best;
  }
  return result;
}

}  // namespace sfwnav
