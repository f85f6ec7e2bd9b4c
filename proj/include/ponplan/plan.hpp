// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

namespace ponplan {

/// A deployment decision: which sites are used and how the PON trees are
/// wired. Maps are keyed by site id, so iteration order is canonical.
struct DeploymentPlan {
  std::vector<std::string> open_cos;
  std::vector<std::string> open_splitters;
  std::map<std::string, std::string> ru_assignment;    // RU/ONU id -> splitter id
  std::map<std::string, std::string> splitter_homing;  // splitter id -> CO id
  double objective_value = 0.0;                        // $
  double feeder_km = 0.0;
  double distribution_km = 0.0;
};

}  // namespace ponplan
