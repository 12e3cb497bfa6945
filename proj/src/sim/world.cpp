#include "sim/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/angles.hpp"
#include "core/errors.hpp"

namespace sfwnav {

const char* to_string(EpisodeStatus s) {
  switch (s) {
    case EpisodeStatus::kRunning: return "running";
    case EpisodeStatus::kSuccess: return "success";
    case EpisodeStatus::kCollision: return "collision";
    case EpisodeStatus::kTimeout: return "timeout";
  }
  return "?";
}

World::World(const Scenario& scenario, std::shared_ptr<const OccupancyGrid> grid,
             const SimParams& params)
    : scenario_(scenario), grid_(std::move(grid)), params_(params), robot_(scenario.robot_start) {
  pedestrians_.reserve(scenario.pedestrians.size());
  int id = 0;
  for (const auto& spec : scenario.pedestrians) {
    Pedestrian ped;
    ped.id = id++;
    ped.agent.position = spec.start;
    ped.agent.velocity = {0.0, 0.0};
    ped.agent.desired_speed = spec.desired_speed;
    ped.agent.radius = spec.radius;
    ped.waypoints = spec.waypoints;
    ped.loop = spec.loop;
    if (spec.waypoints.empty()) {
      ped.agent.has_goal = false;
      ped.agent.goal = spec.start;
    } else {
      ped.agent.goal = spec.waypoints.front();
    }
    pedestrians_.push_back(std::move(ped));
  }
}

SfmAgent World::robot_agent() const {
  SfmAgent a;
  a.position = robot_.position();
  a.velocity = robot_.heading() * cmd_.v;
  a.desired_speed = 0.6;
  a.goal = scenario_.goal;
  a.radius = params_.robot_radius;
  return a;
}

void World::step(const VelocityCommand& cmd, double v_max, double w_max) {
  if (status_ != EpisodeStatus::kRunning)
    throw StateError("World::step on a terminal episode");

  cmd_.v = std::clamp(cmd.v, 0.0, v_max);
  cmd_.w = std::clamp(cmd.w, -w_max, w_max);

  // Pedestrians react to the robot's pre-step state, then both integrate.
  const SfmAgent robot_view = robot_agent();
  const double dt = params_.dt;

  Pose2D next;
  if (std::abs(cmd_.w) < 1e-9) {
    next.x = robot_.x + cmd_.v * dt * std::cos(robot_.theta);
    next.y = robot_.y + cmd_.v * dt * std::sin(robot_.theta);
    next.theta = robot_.theta;
  } else {
    const double th = robot_.theta + cmd_.w * dt;
    const double r = cmd_.v / cmd_.w;
    next.x = robot_.x + r * (std::sin(th) - std::sin(robot_.theta));
    next.y = robot_.y - r * (std::cos(th) - std::cos(robot_.theta));
    next.theta = normalize_angle(th);
  }

  SfmParams sfm = scenario_.sfm;
  sfm.dt = dt;
  step_pedestrians(pedestrians_, *grid_, &robot_view, sfm);

  robot_ = next;
  time_ += dt;
  update_status();
}

void World::update_status() {
  // Collision beats success when both hold in the same step.
  const Vec2 pos = robot_.position();
  bool collided = grid_->obstacle_clearance(pos) < params_.robot_radius;
  if (!collided) {
    for (const auto& ped : pedestrians_) {
      if (distance(pos, ped.agent.position) < params_.robot_radius + ped.agent.radius) {
        collided = true;
        break;
      }
    }
  }
  if (collided) {
    status_ = EpisodeStatus::kCollision;
    return;
  }
  if (distance(pos, scenario_.goal) < params_.goal_tolerance) {
    status_ = EpisodeStatus::kSuccess;
    return;
  }
  if (time_ >= scenario_.max_duration) status_ = EpisodeStatus::kTimeout;
}

namespace {

// Nearest positive intersection of a unit-direction ray with a disc;
// +infinity on a miss, 0 when the origin is inside the disc.
double ray_disc(const Vec2& origin, const Vec2& dir, const Vec2& center, double radius) {
  const Vec2 d = center - origin;
  const double b = d.dot(dir);
  const double disc = b * b - (d.squared_norm() - radius * radius);
  if (disc < 0.0) return std::numeric_limits<double>::infinity();
  const double root = std::sqrt(disc);
  const double t_near = b - root;
  if (t_near >= 0.0) return t_near;
  if (b + root >= 0.0) return 0.0;  // origin inside the disc
  return std::numeric_limits<double>::infinity();
}

}  // namespace

std::vector<double> World::scan() const {
  std::vector<double> ranges(params_.lidar_rays, params_.lidar_max);
  const Vec2 origin = robot_.position();
  for (int k = 0; k < params_.lidar_rays; ++k) {
    const double angle = robot_.theta + (kTwoPi * k) / params_.lidar_rays;
    double r = grid_->raycast(origin, angle, params_.lidar_max);
    const Vec2 dir{std::cos(angle), std::sin(angle)};
    for (const auto& ped : pedestrians_) {
      r = std::min(r, ray_disc(origin, dir, ped.agent.position, ped.agent.radius));
    }
    ranges[k] = std::clamp(r, 0.0, params_.lidar_max);
  }
  return ranges;
}

double World::min_pedestrian_surface_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& ped : pedestrians_) {
    best = std::min(best, distance(robot_.position(), ped.agent.position) -
                              params_.robot_radius - ped.agent.radius);
  }
  return best;
}

double World::min_pedestrian_center_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& ped : pedestrians_) {
    best = std::min(best, distance(robot_.position(), ped.agent.position));
  }
  return best;
}

}  // namespace sfwnav
