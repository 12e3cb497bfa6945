#ifndef SFWNAV_SIM_LIBRARY_HPP_
#define SFWNAV_SIM_LIBRARY_HPP_

#include <string>
#include <vector>

#include "sim/scenario.hpp"

namespace sfwnav {

/// Names of the 12 built-in benchmark scenarios, in reporting order.
const std::vector<std::string>& scenario_library_names();

/// Scenario-format source text of a built-in scenario. Throws
/// std::invalid_argument for unknown names.
const std::string& scenario_library_text(const std::string& name);

bool scenario_library_has(const std::string& name);

/// Convenience: parse + rasterize a built-in scenario.
std::pair<Scenario, std::shared_ptr<const OccupancyGrid>> load_library_scenario(
    const std::string& name);

}  // namespace sfwnav

#endif
