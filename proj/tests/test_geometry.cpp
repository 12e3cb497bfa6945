#include <doctest.h>

#include <cmath>

#include "core/angles.hpp"
#include "core/grid.hpp"
#include "core/rng.hpp"

using namespace sfwnav;

namespace {

// 10 m empty square room at 0.05 m: origin at (0,0), 200x200 cells.
OccupancyGrid empty_room(double size = 10.0, double res = 0.05) {
  const int n = static_cast<int>(size / res);
  OccupancyGrid g(res, n, n, Pose2D(0, 0, 0));
  g.finalize();
  return g;
}

// Same room with a full-height vertical wall, one cell thick, whose near
// face is at x = wall_x.
OccupancyGrid room_with_wall(double wall_x, double size = 10.0, double res = 0.05) {
  const int n = static_cast<int>(size / res);
  OccupancyGrid g(res, n, n, Pose2D(0, 0, 0));
  const int ix = static_cast<int>(wall_x / res);
  for (int iy = 0; iy < n; ++iy) g.set_occupied(ix, iy);
  g.finalize();
  return g;
}

}  // namespace

TEST_CASE("normalize_angle maps into (-pi, pi]") {
  CHECK(normalize_angle(0.0) == 0.0);
  CHECK(normalize_angle(3.0 * kPi) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(normalize_angle(3.0 * kPi) > 0.0);  // boundary maps to +pi
  CHECK(normalize_angle(-1.5 * kPi) == doctest::Approx(0.5 * kPi).epsilon(1e-12));
  CHECK_THROWS_AS(normalize_angle(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK_THROWS_AS(normalize_angle(std::nan("")), std::invalid_argument);
}

TEST_CASE("normalize_angle is idempotent and 2pi-periodic") {
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    const double a = rng.uniform(-50.0, 50.0);
    const double r = normalize_angle(a);
    CHECK(r > -kPi);
    CHECK(r <= kPi);
    CHECK(normalize_angle(r) == r);
    // r == a (mod 2pi)
    const double k = std::round((a - r) / kTwoPi);
    CHECK(std::abs(a - r - k * kTwoPi) < 1e-9);
  }
}

TEST_CASE("raycast saturates in an empty room") {
  const OccupancyGrid g = empty_room();
  CHECK(g.raycast({5.0, 5.0}, 0.0, 3.0) == 3.0);
  CHECK(g.raycast({5.0, 5.0}, 1.1, 3.0) == 3.0);
}

TEST_CASE("raycast hits a wall at the analytic distance") {
  // Wall slab occupies x in [6.5, 6.55); ray from (5, 5) heading +x.
  const OccupancyGrid g = room_with_wall(6.5);
  const double d = g.raycast({5.0, 5.0}, 0.0, 5.0);
  CHECK(std::abs(d - 1.5) <= 0.05);  // within one resolution of the entry face

  // Oblique ray: analytic line-slab intersection.
  const double angle = 0.35;
  const double expected = 1.5 / std::cos(angle);
  CHECK(std::abs(g.raycast({5.0, 5.0}, angle, 5.0) - expected) <= 0.06);
}

TEST_CASE("raycast on an occupied origin returns zero") {
  OccupancyGrid g = empty_room();
  // occupy the cell containing (5, 5)
  int ix, iy;
  g.world_to_cell({5.0, 5.0}, ix, iy);
  g.set_occupied(ix, iy);
  g.finalize();
  CHECK(g.raycast({5.0, 5.0}, 0.7, 3.0) == 0.0);
}

TEST_CASE("raycast is monotone in max_range and bounded by it") {
  const OccupancyGrid g = room_with_wall(6.5);
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const Vec2 p{rng.uniform(0.5, 6.0), rng.uniform(0.5, 9.5)};
    const double a = rng.uniform(-kPi, kPi);
    const double r1 = rng.uniform(0.1, 4.0);
    const double r2 = r1 + rng.uniform(0.0, 4.0);
    const double d1 = g.raycast(p, a, r1);
    const double d2 = g.raycast(p, a, r2);
    CHECK(d1 <= r1);
    CHECK(d2 <= r2);
    CHECK(d2 >= d1);
  }
}

TEST_CASE("min_obstacle_distance saturates and sees adjacent walls") {
  const OccupancyGrid open = empty_room();
  CHECK(open.min_obstacle_distance({5.0, 5.0}) == 3.0);

  // Wall 0.4 m to the right of the query point.
  const OccupancyGrid g = room_with_wall(5.4);
  CHECK(g.min_obstacle_distance({5.0, 5.0}) == doctest::Approx(0.4).epsilon(0.15));

  OccupancyGrid solid = empty_room();
  int ix, iy;
  solid.world_to_cell({5.0, 5.0}, ix, iy);
  solid.set_occupied(ix, iy);
  solid.finalize();
  CHECK(solid.min_obstacle_distance({5.0, 5.0}) == 0.0);
}

TEST_CASE("grid index and world coordinates round-trip within one cell") {
  const OccupancyGrid g(0.05, 40, 30, Pose2D(-1.0, 2.0, 0.0));
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const int ix = static_cast<int>(rng.next_below(40));
    const int iy = static_cast<int>(rng.next_below(30));
    int jx, jy;
    g.world_to_cell(g.cell_center(ix, iy), jx, jy);
    CHECK(jx == ix);
    CHECK(jy == iy);

    const Vec2 p{rng.uniform(-1.0, 1.0), rng.uniform(2.0, 3.5)};
    int kx, ky;
    g.world_to_cell(p, kx, ky);
    const Vec2 back = g.cell_center(kx, ky);
    CHECK(std::abs(back.x - p.x) <= 0.05);
    CHECK(std::abs(back.y - p.y) <= 0.05);
  }
}

TEST_CASE("obstacle clearance and nearest point agree with a wall slab") {
  const OccupancyGrid g = room_with_wall(6.5);
  const Vec2 p{5.0, 5.0};
  // Conservative clearance: within half a diagonal of the true 1.5 m face.
  CHECK(g.obstacle_clearance(p) == doctest::Approx(1.5).epsilon(0.05));
  bool valid = false;
  const Vec2 q = g.nearest_obstacle_point(p, &valid);
  CHECK(valid);
  CHECK(q.x == doctest::Approx(6.5).epsilon(0.05));
  CHECK(q.y == doctest::Approx(5.0).epsilon(0.05));
}

TEST_CASE("out of bounds is occupied") {
  const OccupancyGrid g = empty_room();
  CHECK(g.occupied(-1, 0));
  CHECK(g.occupied(0, 400));
  CHECK(g.occupied(Vec2{-0.3, 5.0}));
  CHECK(g.obstacle_clearance({-0.3, 5.0}) == 0.0);
  // Clearance near the boundary of an empty grid is the boundary distance.
  CHECK(g.obstacle_clearance({0.4, 5.0}) == doctest::Approx(0.4).epsilon(1e-9));
}
