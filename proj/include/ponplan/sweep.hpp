// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ponplan/cost.hpp"
#include "ponplan/instance.hpp"
#include "ponplan/solver.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ponplan {

/// The experiment grid: every delay threshold crossed with every split
/// ratio, solved on one base instance.
struct ScenarioGrid {
  std::vector<double> delay_thresholds_us = {10.0, 20.0, 30.0, 40.0, 50.0};
  std::vector<int> split_ratios = {4, 8, 16};
  int horizon_years = -1;  // -1: keep the instance's horizon
};

struct SweepCell {
  double threshold_us = 0.0;
  int ratio = 0;
  SolveStatus status = SolveStatus::Infeasible;
  bool error = false;          // model build / configuration failure
  std::string message;
  std::optional<DeploymentPlan> plan;
  std::optional<CostReport> report;
  long nodes_explored = 0;
  double wall_time_s = 0.0;
};

/// Cells in grid order: thresholds outer (as listed), ratios inner.
struct SweepReport {
  ScenarioGrid grid;
  std::vector<SweepCell> cells;

  const SweepCell* cell(double threshold_us, int ratio) const;
};

/// Solves every grid cell independently. Per-cell failures are recorded in
/// the cell; the sweep itself never aborts. Cells may be solved on up to
/// `jobs` threads; the report is assembled in grid order either way.
SweepReport run_sweep(const PlanningInstance& base, const ScenarioGrid& grid,
                      const SolveOptions& opts = {}, int jobs = 1);

struct TrendVerdict {
  std::string check;
  bool hard = false;  // hard invariant vs observed-trend check
  bool pass = false;
  std::string detail;
};

/// Evaluates (a) within-ratio TCO monotonicity over the delay threshold
/// (hard invariant), (b) within-threshold TCO ordering across ratios, and
/// (c) within-threshold Opex ordering across ratios (both observed trends).
/// Throws ValidationError when the report is incomplete.
std::vector<TrendVerdict> trend_checks(const SweepReport& report);

/// Flat CSV: threshold_us, ratio, status, tco, capex_*, opex_*, n_cos,
/// n_splitters, fiber_km, nodes, wall_time_s.
std::string sweep_to_csv(const SweepReport& report);
nlohmann::json sweep_to_json(const SweepReport& report);

ScenarioGrid grid_from_json(const nlohmann::json& doc);
ScenarioGrid load_grid(const std::string& path);

}  // namespace ponplan
