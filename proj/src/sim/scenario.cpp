#include "sim/scenario.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace sfwnav {

namespace {

struct LineTokens {
  int number = 0;
  std::string key;
  std::vector<std::string> args;
};

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("scenario line " + std::to_string(line) + ": " + msg);
}

double to_number(const LineTokens& t, std::size_t i) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(t.args.at(i), &pos);
    if (pos != t.args.at(i).size() || !std::isfinite(v)) throw std::invalid_argument("");
    return v;
  } catch (...) {
    fail(t.number, "expected a number, got '" + (i < t.args.size() ? t.args[i] : "") + "'");
  }
}

void expect_args(const LineTokens& t, std::size_t n) {
  if (t.args.size() != n)
    fail(t.number, "'" + t.key + "' expects " + std::to_string(n) + " value(s)");
}

bool to_bool(const LineTokens& t, std::size_t i) {
  const std::string& s = t.args.at(i);
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  fail(t.number, "expected true/false, got '" + s + "'");
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Scenario sc;
  std::string section;
  bool have_bounds = false, have_name = false, have_start = false, have_goal = false;
  PedestrianSpec* ped = nullptr;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);

    LineTokens t;
    t.number = line_no;
    std::istringstream ls(raw);
    std::string tok;
    while (ls >> tok) {
      if (t.key.empty()) {
        t.key = tok;
      } else {
        t.args.push_back(tok);
      }
    }
    if (t.key.empty()) continue;

    if (t.key.front() == '[') {
      if (t.key.back() != ']' || !t.args.empty()) fail(line_no, "malformed section header");
      section = t.key.substr(1, t.key.size() - 2);
      if (section == "pedestrian") {
        sc.pedestrians.emplace_back();
        ped = &sc.pedestrians.back();
      } else if (section != "world" && section != "robot" && section != "sfm" &&
                 section != "episode") {
        fail(line_no, "unknown section [" + section + "]");
      }
      continue;
    }

    if (section == "world") {
      if (t.key == "name") {
        expect_args(t, 1);
        sc.name = t.args[0];
        have_name = true;
      } else if (t.key == "bounds") {
        expect_args(t, 4);
        sc.bounds_origin = {to_number(t, 0), to_number(t, 1)};
        sc.bounds_w = to_number(t, 2);
        sc.bounds_h = to_number(t, 3);
        if (sc.bounds_w <= 0 || sc.bounds_h <= 0) fail(line_no, "bounds must be positive");
        have_bounds = true;
      } else if (t.key == "resolution") {
        expect_args(t, 1);
        sc.resolution = to_number(t, 0);
        if (sc.resolution <= 0) fail(line_no, "resolution must be > 0");
      } else if (t.key == "rect") {
        expect_args(t, 4);
        sc.rects.push_back({to_number(t, 0), to_number(t, 1), to_number(t, 2), to_number(t, 3)});
      } else if (t.key == "line") {
        if (t.args.size() < 4 || t.args.size() % 2 != 0)
          fail(line_no, "'line' expects an even number (>= 4) of coordinates");
        std::vector<Vec2> pts;
        for (std::size_t i = 0; i + 1 < t.args.size(); i += 2)
          pts.push_back({to_number(t, i), to_number(t, i + 1)});
        sc.polylines.push_back(std::move(pts));
      } else {
        fail(line_no, "unknown key '" + t.key + "' in [world]");
      }
    } else if (section == "robot") {
      if (t.key == "start") {
        expect_args(t, 3);
        sc.robot_start = Pose2D(to_number(t, 0), to_number(t, 1), to_number(t, 2));
        have_start = true;
      } else if (t.key == "goal") {
        expect_args(t, 2);
        sc.goal = {to_number(t, 0), to_number(t, 1)};
        have_goal = true;
      } else {
        fail(line_no, "unknown key '" + t.key + "' in [robot]");
      }
    } else if (section == "pedestrian") {
      if (t.key == "start") {
        expect_args(t, 2);
        ped->start = {to_number(t, 0), to_number(t, 1)};
      } else if (t.key == "waypoint") {
        expect_args(t, 2);
        ped->waypoints.push_back({to_number(t, 0), to_number(t, 1)});
      } else if (t.key == "speed") {
        expect_args(t, 1);
        ped->desired_speed = to_number(t, 0);
        if (ped->desired_speed < 0) fail(line_no, "speed must be >= 0");
      } else if (t.key == "radius") {
        expect_args(t, 1);
        ped->radius = to_number(t, 0);
        if (ped->radius <= 0) fail(line_no, "radius must be > 0");
      } else if (t.key == "loop") {
        expect_args(t, 1);
        ped->loop = to_bool(t, 0);
      } else {
        fail(line_no, "unknown key '" + t.key + "' in [pedestrian]");
      }
    } else if (section == "sfm") {
      expect_args(t, 1);
      const double v = to_number(t, 0);
      if (t.key == "A") sc.sfm.A = v;
      else if (t.key == "lambda") sc.sfm.lambda = v;
      else if (t.key == "gamma") sc.sfm.gamma = v;
      else if (t.key == "n") sc.sfm.n = v;
      else if (t.key == "n_prime") sc.sfm.n_prime = v;
      else if (t.key == "A_obs") sc.sfm.A_obs = v;
      else if (t.key == "B_obs") sc.sfm.B_obs = v;
      else if (t.key == "tau") sc.sfm.tau = v;
      else if (t.key == "dt") sc.sfm.dt = v;
      else fail(line_no, "unknown key '" + t.key + "' in [sfm]");
    } else if (section == "episode") {
      if (t.key == "max_duration") {
        expect_args(t, 1);
        sc.max_duration = to_number(t, 0);
        if (sc.max_duration <= 0) fail(line_no, "max_duration must be > 0");
      } else {
        fail(line_no, "unknown key '" + t.key + "' in [episode]");
      }
    } else {
      fail(line_no, "content before any section header");
    }
  }

  if (!have_name) throw ParseError("scenario: missing 'name' in [world]");
  if (!have_bounds) throw ParseError("scenario: missing 'bounds' in [world]");
  if (!have_start) throw ParseError("scenario: missing 'start' in [robot]");
  if (!have_goal) throw ParseError("scenario: missing 'goal' in [robot]");
  return sc;
}

std::shared_ptr<const OccupancyGrid> rasterize_scenario(const Scenario& sc, double robot_radius) {
  const double res = sc.resolution;
  const int width = std::max(1, static_cast<int>(std::ceil(sc.bounds_w / res)));
  const int height = std::max(1, static_cast<int>(std::ceil(sc.bounds_h / res)));
  auto grid = std::make_shared<OccupancyGrid>(
      res, width, height, Pose2D(sc.bounds_origin.x, sc.bounds_origin.y, 0.0));

  for (const auto& r : sc.rects) {
    int ix0, iy0, ix1, iy1;
    grid->world_to_cell({r.x, r.y}, ix0, iy0);
    grid->world_to_cell({r.x + r.w, r.y + r.h}, ix1, iy1);
    for (int iy = std::max(0, iy0); iy <= std::min(height - 1, iy1); ++iy) {
      for (int ix = std::max(0, ix0); ix <= std::min(width - 1, ix1); ++ix) {
        const Vec2 c = grid->cell_center(ix, iy);
        if (c.x >= r.x && c.x <= r.x + r.w && c.y >= r.y && c.y <= r.y + r.h)
          grid->set_occupied(ix, iy);
      }
    }
  }
  for (const auto& pl : sc.polylines) {
    for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
      const Vec2 a = pl[i], b = pl[i + 1];
      const double len = distance(a, b);
      const int steps = std::max(1, static_cast<int>(std::ceil(len / (0.5 * res))));
      for (int k = 0; k <= steps; ++k) {
        const Vec2 q = a + (b - a) * (static_cast<double>(k) / steps);
        int ix, iy;
        grid->world_to_cell(q, ix, iy);
        grid->set_occupied(ix, iy);
      }
    }
  }
  grid->finalize();

  auto check_free = [&](const Vec2& p, double radius, const std::string& what) {
    if (!grid->in_bounds(p)) throw ParseError("scenario '" + sc.name + "': " + what + " out of bounds");
    if (grid->occupied(p) || grid->obstacle_clearance(p) < radius)
      throw ParseError("scenario '" + sc.name + "': " + what + " is in collision");
  };
  check_free(sc.robot_start.position(), robot_radius, "robot start");
  check_free(sc.goal, robot_radius, "goal");
  for (std::size_t i = 0; i < sc.pedestrians.size(); ++i) {
    check_free(sc.pedestrians[i].start, 0.0, "pedestrian " + std::to_string(i) + " start");
  }
  return grid;
}

std::pair<Scenario, std::shared_ptr<const OccupancyGrid>> load_scenario(const std::string& text) {
  Scenario sc = parse_scenario(text);
  auto grid = rasterize_scenario(sc);
  return {std::move(sc), std::move(grid)};
}

Scenario apply_jitter(const Scenario& scenario, std::uint64_t seed, const JitterParams& jitter) {
  Scenario sc = scenario;
  Rng rng(seed ^ 0xa02cf7a5b5d8e3ULL);
  sc.robot_start = Pose2D(sc.robot_start.x + rng.uniform(-jitter.robot_pos, jitter.robot_pos),
                          sc.robot_start.y + rng.uniform(-jitter.robot_pos, jitter.robot_pos),
                          sc.robot_start.theta + rng.uniform(-jitter.robot_theta, jitter.robot_theta));
  for (auto& ped : sc.pedestrians) {
    ped.start.x += rng.uniform(-jitter.pedestrian_pos, jitter.pedestrian_pos);
    ped.start.y += rng.uniform(-jitter.pedestrian_pos, jitter.pedestrian_pos);
    ped.desired_speed *= 1.0 + rng.uniform(-jitter.pedestrian_speed, jitter.pedestrian_speed);
  }
  return sc;
}

}  // namespace sfwnav
