// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ponplan/ilp.hpp"
#include "ponplan/plan.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ponplan {

enum class SolveMode { ExactBnb, BruteForce };
enum class SolveStatus { Optimal, Feasible, Infeasible, TimedOut };

const char* to_string(SolveMode mode);
const char* to_string(SolveStatus status);

struct SolveOptions {
  SolveMode mode = SolveMode::ExactBnb;
  double time_limit_s = 900.0;
  double gap_tolerance = 0.0;  // 0 = prove optimality
  uint64_t seed = 0;           // shuffles tie-breaking; 0 = lexicographic
  long node_limit = 0;         // 0 = unlimited
  double brute_force_guard = 1e7;
};

struct IncumbentSample {
  double wall_time_s = 0.0;
  double objective = 0.0;
};

struct SolveStats {
  long nodes_explored = 0;
  double wall_time_s = 0.0;
  std::vector<IncumbentSample> incumbent_trace;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<DeploymentPlan> plan;
  double bound = 0.0;  // proven lower bound; equals the objective when Optimal
  double gap = 0.0;    // relative, (objective - bound) / objective
  std::string message; // infeasibility certificate or limit reason
  SolveStats stats;
};

/// Minimizes the model exactly. Optimal results carry a plan that passes
/// verify_plan with zero violations; infeasible results carry a
/// human-readable certificate. Throws ConfigError on invalid options.
SolveResult solve(const IlpModel& model, const SolveOptions& opts = {});

/// Exhaustive oracle: enumerates every (splitter opening, homing,
/// assignment) combination, keeps candidates that satisfy all constraint
/// rows, and returns the best. Throws SizeError with a configuration-count
/// estimate when the instance exceeds size_guard.
SolveResult brute_force(const IlpModel& model, double size_guard = 1e7);

/// A prefix of a deployment decision: some RU/ONUs routed, their splitters
/// homed. Splitters named in ru_to_splitter must appear in splitter_homing.
struct PartialAssignment {
  std::map<std::string, std::string> ru_to_splitter;
  std::map<std::string, std::string> splitter_homing;
};

/// Admissible lower bound on the cost of every feasible completion of the
/// partial assignment: committed cost plus, per unrouted RU/ONU, the
/// cheapest feasible marginal with opening costs amortized over capacity.
/// Equals the exact objective when the assignment is complete.
double lower_bound(const IlpModel& model, const PartialAssignment& partial);

}  // namespace ponplan
