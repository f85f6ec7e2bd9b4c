// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ponplan/cost.hpp"
#include "ponplan/instance.hpp"
#include "ponplan/plan.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ponplan {

enum class VarKind : uint8_t {
  CoOpen,            // C_i
  SplitterOpen,      // S_j
  RuDeployed,        // R_r
  FeederLink,        // x_ij, CO -> splitter
  DistributionLink,  // x_jr, splitter -> RU/ONU
};

const char* to_string(VarKind kind);

/// One binary decision variable. `a` and `b` index into the instance site
/// lists: (co) for CoOpen, (splitter) for SplitterOpen, (ru) for RuDeployed,
/// (co, splitter) for FeederLink, (splitter, ru) for DistributionLink.
struct VariableId {
  VarKind kind = VarKind::CoOpen;
  int a = -1;
  int b = -1;
};

enum class Sense : uint8_t { LessEq, Eq, GreaterEq };

/// One constraint row. `family` is the family label (eq13..eq26, link_co,
/// ru_fixed) and `name` additionally encodes the site indices.
struct LinearConstraint {
  std::string name;
  std::string family;
  std::vector<std::pair<int, double>> terms;  // (variable index, coefficient)
  Sense sense = Sense::LessEq;
  double rhs = 0.0;
  int idx_co = -1;  // family-specific indices, -1 when not applicable
  int idx_sp = -1;
  int idx_ru = -1;
};

/// Derived view of the model used by the search engines: per-variable
/// objective coefficients arranged by network role, effective per-splitter
/// RU capacity, and per-triple link feasibility implied by the delay and
/// distance rows.
struct ModelStructure {
  int n_cos = 0;
  int n_splitters = 0;
  int n_rus = 0;
  Eigen::VectorXd co_open_cost;        // per CO, coefficient of C_i
  Eigen::VectorXd splitter_open_cost;  // per splitter, coefficient of S_j
  Eigen::MatrixXd feeder_cost;         // (C x S), coefficient of x_ij
  Eigen::MatrixXd distribution_cost;   // (S x R), coefficient of x_jr
  double ru_unit_cost = 0.0;           // coefficient of each R_r (fixed to 1)
  double objective_constant = 0.0;     // horizon * software license
  int ru_cap_per_splitter = 0;         // min of eta and the rate ceilings
  int max_splitters_per_co = 0;        // H
  double big_m_delay = 0.0;
  double big_m_distance = 0.0;
  std::vector<uint8_t> triple_ok;      // (C x S x R), all per-path limits

  bool triple_feasible(int i, int j, int r) const {
    return triple_ok[(static_cast<size_t>(i) * n_splitters + j) * n_rus + r] != 0;
  }
};

struct ModelMetadata {
  std::string instance_fingerprint;
  std::map<std::string, std::string> parameter_echo;
  std::vector<std::string> notes;
};

/// The deployment ILP: binary variables, linear rows, and a linear
/// objective whose value on a feasible assignment equals the TCO of the
/// corresponding plan.
struct IlpModel {
  std::shared_ptr<const PlanningInstance> instance;
  DistanceMatrix distances;
  std::vector<VariableId> variables;
  Eigen::VectorXd objective;   // per-variable coefficients, all >= 0
  double objective_constant = 0.0;
  std::vector<LinearConstraint> constraints;
  ModelStructure structure;
  ModelMetadata metadata;

  // variable index layout: C | S | R | x_ij (CO-major) | x_jr (splitter-major)
  int var_co(int i) const { return i; }
  int var_splitter(int j) const { return structure.n_cos + j; }
  int var_ru(int r) const { return structure.n_cos + structure.n_splitters + r; }
  int var_feeder(int i, int j) const {
    return structure.n_cos + structure.n_splitters + structure.n_rus +
           i * structure.n_splitters + j;
  }
  int var_distribution(int j, int r) const {
    return structure.n_cos + structure.n_splitters + structure.n_rus +
           structure.n_cos * structure.n_splitters + j * structure.n_rus + r;
  }

  std::string variable_name(int var_index) const;
};

struct BuildOptions {
  long max_variables = 1000000;
};

/// Translates an instance into the explicit ILP. Throws ConfigError when the
/// cost table lacks the instance's split ratio, SizeError when the variable
/// count exceeds the budget.
IlpModel build_model(const PlanningInstance& inst, const DistanceMatrix& dm,
                     const BuildOptions& opts = {});
IlpModel build_model(const PlanningInstance& inst);

/// Canonical objective of a plan under this model; identical to
/// total_cost(plan, instance).tco by construction.
double plan_objective(const IlpModel& model, const DeploymentPlan& plan);

/// 0/1 values of every model variable implied by a plan (R_r is always 1).
/// Throws StructuralError on unknown site ids.
Eigen::VectorXd plan_to_assignment(const IlpModel& model, const DeploymentPlan& plan);

struct Violation {
  std::string constraint;  // row name, e.g. "eq14_s7"
  std::string family;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // negative when violated
  std::string detail;
};

struct VerifyResult {
  bool feasible = false;
  std::vector<Violation> violations;
  double objective = 0.0;  // canonical objective of the plan
};

/// Checks a plan against every constraint row and recomputes its objective.
/// Row arithmetic uses a 1e-9 feasibility tolerance.
VerifyResult verify_plan(const DeploymentPlan& plan, const IlpModel& model);

/// total_cost with feasibility enforcement: throws ValidationError listing
/// every violated row when the plan is infeasible for the model.
CostReport total_cost_verified(const DeploymentPlan& plan, const IlpModel& model);

}  // namespace ponplan
