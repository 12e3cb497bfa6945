#include "sim/library.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace sfwnav {

namespace {

// Desk-scale task library: frontal passing, overtaking, orthogonal crossing,
// a static person on the path, narrow curved passage, doorway, open-space
// crowds and a free-space control.
const std::array<std::pair<const char*, const char*>, 12> kLibrary = {{
    {"free_space", R"(# open room, no obstacles, no people: free-space control
[world]
name free_space
bounds 0 0 10 6
[robot]
start 0.8 3.0 0
goal 9.2 3.0
)"},

    {"corridor_pass", R"(# frontal passing: one oncoming pedestrian in a corridor
[world]
name corridor_pass
bounds 0 0 10 2.8
rect 0 0 10 0.2
rect 0 2.6 10 0.2
[robot]
start 0.8 1.4 0
goal 9.2 1.4
[pedestrian]
start 9.0 1.4
waypoint 0.9 1.4
speed 0.9
)"},

    {"overtake", R"(# overtaking a slower pedestrian walking the same way
[world]
name overtake
bounds 0 0 10 2.8
rect 0 0 10 0.2
rect 0 2.6 10 0.2
[robot]
start 0.8 1.3 0
goal 9.3 1.0
[pedestrian]
start 3.0 1.4
waypoint 9.2 1.9
speed 0.35
)"},

    {"crossing", R"(# orthogonal crossing at a corridor intersection
[world]
name crossing
bounds 0 0 10 10
rect 0 0 3.8 3.8
rect 6.2 0 3.8 3.8
rect 0 6.2 3.8 3.8
rect 6.2 6.2 3.8 3.8
[robot]
start 2.6 5.0 0
goal 9.2 5.0
[pedestrian]
start 5.0 9.2
waypoint 5.0 0.8
speed 0.9
[episode]
max_duration 45
)"},

    {"static_blocker", R"(# a static person standing on the global path
[world]
name static_blocker
bounds 0 0 10 2.8
rect 0 0 10 0.2
rect 0 2.6 10 0.2
[robot]
start 0.8 1.4 0
goal 9.2 1.4
[pedestrian]
start 5.0 1.4
)"},

    {"narrow_passage", R"(# narrow curved passage with an oncoming pedestrian
[world]
name narrow_passage
bounds 0 0 8 8
rect 0 0 0.5 8
rect 0 0 8 0.5
rect 7.5 0 0.5 8
rect 0 7.5 8 0.5
rect 1.9 0.5 5.6 5.6
[robot]
start 1.2 1.0 1.5707963
goal 7.0 6.8
[pedestrian]
start 6.5 6.8
waypoint 1.2 6.6
waypoint 1.2 1.2
speed 0.8
)"},

    {"open_crowd", R"(# open-space mixed crowd of four pedestrians
[world]
name open_crowd
bounds 0 0 10 8
[robot]
start 0.8 4.0 0
goal 9.2 4.0
[pedestrian]
start 8.5 2.0
waypoint 1.5 6.0
speed 0.9
[pedestrian]
start 8.0 6.5
waypoint 2.0 1.5
speed 0.8
[pedestrian]
start 2.0 6.5
waypoint 8.0 1.0
speed 0.9
[pedestrian]
start 9.0 4.2
waypoint 1.0 4.2
waypoint 9.0 4.2
speed 0.7
loop true
)"},

    {"corridor_pass_two", R"(# two oncoming pedestrians in a corridor
[world]
name corridor_pass_two
bounds 0 0 10 3.0
rect 0 0 10 0.2
rect 0 2.8 10 0.2
[robot]
start 0.8 1.5 0
goal 9.2 1.5
[pedestrian]
start 9.0 1.0
waypoint 1.0 1.0
speed 0.9
[pedestrian]
start 8.2 2.0
waypoint 1.0 2.0
speed 0.8
)"},

    {"crossing_pair", R"(# two pedestrians crossing the intersection in both directions
[world]
name crossing_pair
bounds 0 0 10 10
rect 0 0 3.8 3.8
rect 6.2 0 3.8 3.8
rect 0 6.2 3.8 3.8
rect 6.2 6.2 3.8 3.8
[robot]
start 2.6 5.0 0
goal 9.2 5.0
[pedestrian]
start 5.0 9.2
waypoint 5.0 0.8
speed 0.9
[pedestrian]
start 4.6 0.8
waypoint 4.6 9.2
speed 0.7
[episode]
max_duration 45
)"},

    {"doorway", R"(# 0.9 m doorway with a person loitering just past it
[world]
name doorway
bounds 0 0 10 6
rect 4.9 0 0.2 2.5
rect 4.9 3.4 0.2 2.6
[robot]
start 1.0 3.0 0
goal 9.0 3.0
[pedestrian]
start 5.6 2.7
[pedestrian]
start 9.2 3.0
waypoint 6.5 3.0
speed 0.6
)"},

    {"overtake_cross", R"(# overtaking a slow pedestrian while another crosses
[world]
name overtake_cross
bounds 0 0 10 7
[robot]
start 0.8 3.5 0
goal 9.2 3.5
[pedestrian]
start 3.0 3.5
waypoint 9.0 3.8
speed 0.35
[pedestrian]
start 6.0 6.5
waypoint 6.0 0.5
speed 0.9
)"},

    {"open_mixed", R"(# mixed crowd around a central pillar
[world]
name open_mixed
bounds 0 0 10 8
rect 4.6 3.6 0.8 0.8
[robot]
start 0.8 4.0 0
goal 9.2 4.0
[pedestrian]
start 9.0 6.0
waypoint 1.0 2.0
speed 0.9
[pedestrian]
start 1.0 6.0
waypoint 9.0 2.0
speed 0.8
[pedestrian]
start 5.0 7.5
waypoint 5.0 0.5
speed 0.7
)"},
}};

}  // namespace

const std::vector<std::string>& scenario_library_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    v.reserve(kLibrary.size());
    for (const auto& [name, text] : kLibrary) v.emplace_back(name);
    return v;
  }();
  return names;
}

const std::string& scenario_library_text(const std::string& name) {
  static const std::vector<std::string> texts = [] {
    std::vector<std::string> v;
    v.reserve(kLibrary.size());
    for (const auto& [n, text] : kLibrary) v.emplace_back(text);
    return v;
  }();
  for (std::size_t i = 0; i < kLibrary.size(); ++i) {
    if (name == kLibrary[i].first) return texts[i];
  }
  throw std::invalid_argument("unknown library scenario '" + name + "'");
}

bool scenario_library_has(const std::string& name) {
  for (const auto& [n, text] : kLibrary) {
    if (name == n) return true;
  }
  return false;
}

std::pair<Scenario, std::shared_ptr<const OccupancyGrid>> load_library_scenario(
    const std::string& name) {
  return load_scenario(scenario_library_text(name));
}

}  // namespace sfwnav
