#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "sim/library.hpp"
#include "sim/world.hpp"

using namespace sfwnav;

namespace {

const char* kOpenScenario = R"(
[world]
name open
bounds 0 0 10 6
[robot]
start 1.0 3.0 0
goal 9.0 3.0
)";

const char* kCorridorScenario = R"(
[world]
name corridor
bounds 0 0 10 3
rect 0 0 10 0.5
rect 0 2.5 10 0.5
[robot]
start 1.0 1.5 0
goal 9.0 1.5
)";

}  // namespace

TEST_CASE("empty obstacle list rasterizes to a fully free grid") {
  auto [sc, grid] = load_scenario(kOpenScenario);
  for (int iy = 0; iy < grid->height(); ++iy)
    for (int ix = 0; ix < grid->width(); ++ix) CHECK(!grid->occupied(ix, iy));
}

TEST_CASE("corridor walls produce the expected raycast span") {
  auto [sc, grid] = load_scenario(kCorridorScenario);
  // Across the 2.0 m free corridor from its centerline: 1.0 m each way.
  const double up = grid->raycast({5.0, 1.5}, kPi / 2, 3.0);
  const double down = grid->raycast({5.0, 1.5}, -kPi / 2, 3.0);
  CHECK(std::abs(up - 1.0) <= 0.05);
  CHECK(std::abs(down - 1.0) <= 0.05);
}

TEST_CASE("goal inside a wall is a load error") {
  const char* bad = R"(
[world]
name bad
bounds 0 0 10 3
rect 8 0 2 3
[robot]
start 1.0 1.5 0
goal 9.0 1.5
)";
  CHECK_THROWS_AS(load_scenario(bad), ParseError);
}

TEST_CASE("unknown keys and malformed input are strict parse errors") {
  CHECK_THROWS_AS(parse_scenario("[world]\nname x\nbounds 0 0 1 1\nfrobnicate 3\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("[warld]\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("[world]\nname x\nbounds 0 0 nope 1\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("stray line\n"), ParseError);
  // Missing required fields.
  CHECK_THROWS_AS(parse_scenario("[world]\nname x\nbounds 0 0 1 1\n"), ParseError);
}

TEST_CASE("full-speed straight drive advances exactly v*t") {
  auto [sc, grid] = load_scenario(kOpenScenario);
  World world(sc, grid);
  for (int k = 0; k < 20; ++k) world.step({0.6, 0.0});  // 1 s
  CHECK(world.robot().x == doctest::Approx(1.6).epsilon(1e-9));
  CHECK(world.robot().y == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(world.time() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("driving into a wall collides within the geometric time budget") {
  const char* text = R"(
[world]
name wall_run
bounds 0 0 10 3
rect 0 0 10 0.5
rect 0 2.5 10 0.5
[robot]
start 5.0 1.5 1.5707963267948966
goal 9.0 1.5
)";
  auto [sc, grid] = load_scenario(text);
  World world(sc, grid);
  // Gap to the upper wall face is 1.0 m; contact at 1.0 - robot radius.
  const double budget = (1.0 - 0.25) / 0.6 + 0.2;
  while (world.running()) {
    world.step({0.6, 0.0});
    REQUIRE(world.time() < budget + 1.0);
  }
  CHECK(world.status() == EpisodeStatus::kCollision);
  CHECK(world.time() <= budget);
}

TEST_CASE("terminal worlds refuse to step") {
  auto [sc, grid] = load_scenario(kOpenScenario);
  World world(sc, grid);
  int guard = 0;
  while (world.running() && guard++ < 10000) world.step({0.6, 0.0});
  CHECK(world.status() == EpisodeStatus::kSuccess);
  CHECK_THROWS_AS(world.step({0.1, 0.0}), StateError);
}

TEST_CASE("scan saturates open space and sees pedestrian discs") {
  auto [sc, grid] = load_scenario(kOpenScenario);
  World world(sc, grid);
  const auto open_ranges = world.scan();
  REQUIRE(open_ranges.size() == 36);
  for (const double r : open_ranges) CHECK(r <= 3.0);
  // Beams pointing into the open saturate.
  CHECK(open_ranges[0] == 3.0);

  Scenario with_ped = sc;
  PedestrianSpec ped;
  ped.start = {2.0, 3.0};  // 1 m dead ahead of the robot
  with_ped.pedestrians.push_back(ped);
  World world2(with_ped, grid);
  const auto ranges = world2.scan();
  CHECK(ranges[0] == doctest::Approx(1.0 - 0.35).epsilon(1e-9));
}

TEST_CASE("scenario library: 12 scenarios, all load, static_blocker shape") {
  const auto& names = scenario_library_names();
  CHECK(names.size() == 12);
  for (const auto& name : names) {
    auto [sc, grid] = load_library_scenario(name);
    CHECK(sc.name == name);
    CHECK(grid->cell_count() > 0);
  }
  auto [blocker, grid] = load_library_scenario("static_blocker");
  REQUIRE(blocker.pedestrians.size() == 1);
  CHECK(blocker.pedestrians[0].waypoints.empty());
  // The static person stands astride the start-goal segment.
  CHECK(blocker.pedestrians[0].start.y == doctest::Approx(blocker.robot_start.y));
  CHECK(blocker.pedestrians[0].start.x > blocker.robot_start.x);
  CHECK(blocker.pedestrians[0].start.x < blocker.goal.x);
}

TEST_CASE("robot displacement per step is bounded by v_max dt") {
  auto [sc, grid] = load_library_scenario("open_crowd");
  World world(sc, grid);
  Vec2 prev = world.robot().position();
  for (int k = 0; k < 200 && world.running(); ++k) {
    world.step({0.9, 0.4});  // over-limit command gets clamped
    const Vec2 cur = world.robot().position();
    CHECK(distance(prev, cur) <= 0.6 * 0.05 + 1e-9);
    prev = cur;
  }
}

TEST_CASE("pedestrians never teleport") {
  auto [sc, grid] = load_library_scenario("open_crowd");
  World world(sc, grid);
  std::vector<Vec2> prev;
  for (const auto& ped : world.pedestrians()) prev.push_back(ped.agent.position);
  for (int k = 0; k < 400 && world.running(); ++k) {
    world.step({0.4, 0.0});
    for (std::size_t i = 0; i < world.pedestrians().size(); ++i) {
      const auto& ped = world.pedestrians()[i];
      CHECK(distance(prev[i], ped.agent.position) <=
            1.5 * ped.agent.desired_speed * 0.05 + 1e-9);
      prev[i] = ped.agent.position;
    }
  }
}

TEST_CASE("identical command sequences give bit-identical worlds") {
  auto [sc, grid] = load_library_scenario("corridor_pass");
  World a(sc, grid);
  World b(sc, grid);
  for (int k = 0; k < 300 && a.running() && b.running(); ++k) {
    const VelocityCommand cmd{0.4, std::sin(k * 0.1) * 0.3};
    a.step(cmd);
    b.step(cmd);
    CHECK(a.robot().x == b.robot().x);
    CHECK(a.robot().y == b.robot().y);
    CHECK(a.robot().theta == b.robot().theta);
    for (std::size_t i = 0; i < a.pedestrians().size(); ++i) {
      CHECK(a.pedestrians()[i].agent.position.x == b.pedestrians()[i].agent.position.x);
      CHECK(a.pedestrians()[i].agent.position.y == b.pedestrians()[i].agent.position.y);
    }
  }
  CHECK(a.status() == b.status());
}

TEST_CASE("lidar-collision consistency") {
  // If the minimum scan range drops below the robot radius, the geometric
  // collision predicate must have fired in the same step.
  auto [sc, grid] = load_scenario(kCorridorScenario);
  World world(sc, grid);
  bool done = false;
  for (int k = 0; k < 2000 && !done; ++k) {
    if (!world.running()) {
      done = true;
      break;
    }
    const auto ranges = world.scan();
    const double min_r = *std::min_element(ranges.begin(), ranges.end());
    if (min_r < 0.25) CHECK(!world.running());
    if (world.running()) world.step({0.5, 0.25});
  }
}

TEST_CASE("collision precedence over success") {
  // The goal ring and the pedestrian contact ring share the boundary
  // x = 3.71, so one step activates both conditions at once. A = 0 keeps the
  // person pinned in place.
  const char* text = R"(
[world]
name precedence
bounds 0 0 10 6
[robot]
start 1.0 3.0 0
goal 4.01 3.0
[pedestrian]
start 4.31 3.0
[sfm]
A 0
)";
  auto [sc, grid] = load_scenario(text);
  World world(sc, grid);
  int guard = 0;
  while (world.running() && guard++ < 4000) world.step({0.6, 0.0});
  CHECK(world.status() == EpisodeStatus::kCollision);
}

TEST_CASE("timeout fires at max_duration") {
  const char* text = R"(
[world]
name idle
bounds 0 0 10 6
[robot]
start 1.0 3.0 0
goal 9.0 3.0
[episode]
max_duration 2
)";
  auto [sc, grid] = load_scenario(text);
  World world(sc, grid);
  int guard = 0;
  while (world.running() && guard++ < 1000) world.step({0.0, 0.0});
  CHECK(world.status() == EpisodeStatus::kTimeout);
  CHECK(world.time() == doctest::Approx(2.0).epsilon(1e-6));
}
