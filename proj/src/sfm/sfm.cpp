#include "sfm/sfm.hpp"

#include <algorithm>
#include <cmath>

#include "core/angles.hpp"

namespace sfwnav {

namespace {
constexpr double kCoincidentEps = 1e-9;

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }
}  // namespace

Vec2 goal_force(const SfmAgent& agent, double relaxation_time) {
  const Vec2 to_goal = agent.goal - agent.position;
  if (!agent.has_goal || to_goal.norm() < kCoincidentEps) {
    return (-1.0 / relaxation_time) * agent.velocity;
  }
  const Vec2 desired = to_goal.normalized() * agent.desired_speed;
  return (desired - agent.velocity) / relaxation_time;
}

Vec2 social_force_between(const SfmAgent& self, const SfmAgent& other, const SfmParams& p) {
  Vec2 diff = other.position - self.position;
  double dist = diff.norm();
  if (dist < kCoincidentEps) {
    // Coincident centers: push self along +x with contact-distance magnitude.
    dist = self.radius + other.radius;
    diff = {-dist, 0.0};
  }
  const Vec2 diff_dir = diff / dist;

  const Vec2 vel_diff = self.velocity - other.velocity;
  const Vec2 interaction = p.lambda * vel_diff + diff_dir;
  const double interaction_len = interaction.norm();
  if (interaction_len < kCoincidentEps) return {0.0, 0.0};
  const Vec2 interaction_dir = interaction / interaction_len;

  const double B = p.gamma * interaction_len;
  const double theta = normalize_angle(diff_dir.angle() - interaction_dir.angle());

  const double amount_velocity =
      -std::exp(-dist / B - (p.n_prime * B * theta) * (p.n_prime * B * theta));
  const double amount_angle =
      -sign(theta) * std::exp(-dist / B - (p.n * B * theta) * (p.n * B * theta));

  const Vec2 force =
      amount_velocity * interaction_dir + amount_angle * interaction_dir.left_normal();
  return p.A * force;
}

Vec2 obstacle_force(const SfmAgent& agent, const Vec2& nearest_obstacle_point,
                    const SfmParams& p) {
  Vec2 away = agent.position - nearest_obstacle_point;
  double d = away.norm();
  if (d < kCoincidentEps) {
    away = {1.0, 0.0};
    d = 0.0;
  } else {
    away = away / d;
  }
  return p.A_obs * std::exp((agent.radius - d) / p.B_obs) * away;
}

std::pair<double, std::vector<double>> social_work_step(
    const ForceBreakdown& robot_breakdown, const std::vector<Vec2>& robot_on_pedestrians) {
  const double w_r = robot_breakdown.social_force.norm() + robot_breakdown.obstacle_force.norm();
  std::vector<double> w_p;
  w_p.reserve(robot_on_pedestrians.size());
  for (const Vec2& f : robot_on_pedestrians) w_p.push_back(f.norm());
  return {w_r, w_p};
}

namespace {

void advance_waypoint(Pedestrian& ped) {
  if (ped.waypoints.empty()) {
    ped.agent.has_goal = false;
    return;
  }
  ped.agent.has_goal = true;
  if (distance(ped.agent.position, ped.waypoints[ped.waypoint_index]) < 0.3) {
    if (ped.waypoint_index + 1 < ped.waypoints.size()) {
      ++ped.waypoint_index;
    } else if (ped.loop) {
      ped.waypoint_index = 0;
    }
  }
  ped.agent.goal = ped.waypoints[ped.waypoint_index];
}

}  // namespace

void step_pedestrians(std::vector<Pedestrian>& pedestrians, const OccupancyGrid& grid,
                      const SfmAgent* robot, const SfmParams& p) {
  const std::size_t n = pedestrians.size();
  if (n == 0) return;

  std::vector<Vec2> forces(n);
  for (std::size_t i = 0; i < n; ++i) {
    Pedestrian& ped = pedestrians[i];
    advance_waypoint(ped);

    Vec2 f = goal_force(ped.agent, p.tau);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      f += social_force_between(ped.agent, pedestrians[j].agent, p);
    }
    bool valid = false;
    const Vec2 obs = grid.nearest_obstacle_point(ped.agent.position, &valid);
    if (valid) f += obstacle_force(ped.agent, obs, p);
    if (robot) f += social_force_between(ped.agent, *robot, p);
    forces[i] = f;
  }

  for (std::size_t i = 0; i < n; ++i) {
    Pedestrian& ped = pedestrians[i];
    Vec2 v = ped.agent.velocity + forces[i] * p.dt;
    const double speed_cap = 1.5 * ped.agent.desired_speed;
    const double speed = v.norm();
    if (speed > speed_cap && speed > 0.0) v = v * (speed_cap / speed);
    ped.agent.velocity = v;
    ped.agent.position += v * p.dt;
  }
}

}  // namespace sfwnav
