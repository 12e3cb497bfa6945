#ifndef SFWNAV_SFM_SFM_HPP_
#define SFWNAV_SFM_SFM_HPP_

#include <vector>

#include "core/grid.hpp"
#include "core/vec2.hpp"

namespace sfwnav {

/// Social force model parameters. Pairwise interaction follows the
/// Moussaid-style formulation (interaction vector built from relative
/// velocity and the direction to the neighbour); obstacles repel with a
/// plain exponential falloff.
struct SfmParams {
  double A = 4.5;         // social interaction strength
  double lambda = 2.0;    // relative-velocity weight in the interaction vector
  double gamma = 0.35;    // interaction length scale factor
  double n = 2.0;         // angular falloff, tangential component
  double n_prime = 3.0;   // angular falloff, interaction-direction component
  double A_obs = 10.0;    // obstacle force strength
  double B_obs = 0.1;     // obstacle force range [m]
  double tau = 0.5;       // goal relaxation time [s]
  double dt = 0.05;       // pedestrian integration step [s]
};

/// One force-model agent (pedestrian, or the robot viewed as one).
struct SfmAgent {
  Vec2 position;              // [m]
  Vec2 velocity;              // [m/s]
  double desired_speed = 0.9; // [m/s]
  Vec2 goal;                  // current waypoint [m]
  bool has_goal = true;       // false: agent holds position (static person)
  double radius = 0.35;       // [m]
};

/// Robot-centric force decomposition for one instant.
struct ForceBreakdown {
  Vec2 goal_force;
  Vec2 obstacle_force;
  Vec2 social_force;                              // sum of per_agent_social
  std::vector<std::pair<int, Vec2>> per_agent_social;
};

/// Running social-work totals; increments are appended in insertion order so
/// the totals are bit-reproducible.
struct SocialWorkAccumulator {
  double w_r = 0.0;
  std::vector<double> w_p;  // one entry per pedestrian
  long steps = 0;

  void add(double w_r_increment, const std::vector<double>& w_p_increments) {
    w_r += w_r_increment;
    if (w_p.size() < w_p_increments.size()) w_p.resize(w_p_increments.size(), 0.0);
    for (std::size_t i = 0; i < w_p_increments.size(); ++i) w_p[i] += w_p_increments[i];
    ++steps;
  }

  double total() const {
    double t = w_r;
    for (const double x : w_p) t += x;
    return t;
  }
};

/// Attractive force steering the agent toward its goal at desired speed.
Vec2 goal_force(const SfmAgent& agent, double relaxation_time);

/// Repulsive pairwise interaction force exerted on self by other.
/// Finite for every finite input; coincident agents fall back to a +x push
/// at contact-distance magnitude.
Vec2 social_force_between(const SfmAgent& self, const SfmAgent& other, const SfmParams& p);

/// Exponential repulsion from the nearest obstacle point.
Vec2 obstacle_force(const SfmAgent& agent, const Vec2& nearest_obstacle_point,
                    const SfmParams& p);

/// Per-step social-work increments: w_r from the robot's own social and
/// obstacle forces, one w_p entry per pedestrian the robot pushes on.
std::pair<double, std::vector<double>> social_work_step(
    const ForceBreakdown& robot_breakdown, const std::vector<Vec2>& robot_on_pedestrians);

/// Simulation-side pedestrian: SfmAgent plus waypoint progression state.
struct Pedestrian {
  int id = 0;
  SfmAgent agent;
  std::vector<Vec2> waypoints;
  std::size_t waypoint_index = 0;
  bool loop = false;
};

/// Advances all pedestrians one step of p.dt using symplectic Euler: goal +
/// pairwise social + obstacle forces, plus the robot as one extra social
/// repulsor when given. Speed is clamped at 1.5x desired speed and waypoints
/// advance within 0.3 m.
void step_pedestrians(std::vector<Pedestrian>& pedestrians, const OccupancyGrid& grid,
                      const SfmAgent* robot, const SfmParams& p);

}  // namespace sfwnav

#endif
