// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ponplan/cost.hpp"
#include "ponplan/instance.hpp"
#include "ponplan/plan.hpp"
#include "ponplan/solver.hpp"

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace ponplan {

// ---- canonical serialization ------------------------------------------
// Canonical form: object keys sorted, floats printed with 6 fixed decimals.
// Identical values always serialize to identical bytes.

std::string canonical_dump(const nlohmann::json& value);
std::string fingerprint_hex(const std::string& bytes);  // FNV-1a 64

// ---- planning instances ------------------------------------------------

/// Parses, validates, and feasibility-prechecks an instance document.
/// ParseError names the offending field; ValidationError lists every
/// failed check.
PlanningInstance load_instance(const std::string& path);
PlanningInstance instance_from_json(const nlohmann::json& doc);
nlohmann::json instance_to_json(const PlanningInstance& inst);
void save_instance(const PlanningInstance& inst, const std::string& path);
std::string instance_fingerprint(const PlanningInstance& inst);

/// CSV site list, columns: kind,id,x_km,y_km. Kind is one of
/// central_office | splitter | ru_onu. Header row optional.
std::vector<Site> parse_sites_csv(std::istream& in);
std::vector<Site> load_sites_csv(const std::string& path);
std::string sites_to_csv(const PlanningInstance& inst);

// ---- plans ---------------------------------------------------------------

nlohmann::json plan_to_json(const DeploymentPlan& plan);
DeploymentPlan plan_from_json(const nlohmann::json& doc);
DeploymentPlan load_plan(const std::string& path);
void save_plan(const DeploymentPlan& plan, const std::string& path);

// ---- reports and results ---------------------------------------------

nlohmann::json report_to_json(const CostReport& report);
nlohmann::json solve_result_to_json(const SolveResult& result);

/// Incumbent trace as CSV rows (wall_time_s, objective).
std::string trace_to_csv(const SolveStats& stats);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace ponplan
