// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ponplan/instance.hpp"
#include "ponplan/plan.hpp"

namespace ponplan {

/// Deployed-unit counts feeding the cost formulas.
struct UnitCounts {
  long n_cos = 0;        // central offices in use
  long n_dos = 0;        // DOs, one per feeder link
  long n_awgs = 0;       // AWGs, one per feeder link
  long n_splitters = 0;  // power splitters in use
  long n_ru_onus = 0;    // deployed RU/ONUs
};

/// Total cost of ownership, decomposed. The three identities
///   capex_total = equipment + infrastructure + installation
///   opex_total  = energy + o&m + site rental
///   tco         = capex_total + horizon_years * opex_total
/// hold exactly on every report this library produces.
struct CostReport {
  double capex_equipment = 0.0;
  double capex_infrastructure = 0.0;
  double capex_installation = 0.0;
  double capex_total = 0.0;
  double opex_energy = 0.0;        // $/year
  double opex_om = 0.0;            // $/year
  double opex_site_rental = 0.0;   // $/year
  double opex_total = 0.0;         // $/year
  double tco = 0.0;
  int horizon_years = 0;
  UnitCounts units;
  double fiber_total_km = 0.0;
};

/// Purchase cost of all deployed equipment, central-office housing included.
double equipment_cost(const UnitCounts& units, const CostTable& costs, int ratio);

/// Fiber material + civil work for the given total length.
double infrastructure_cost(double total_fiber_km, const CostTable& costs);

/// Technician time for installing n_links fiber links.
double installation_cost(long n_links, const CostTable& costs);

/// Yearly electricity bill of the deployed DOs (with cooling) and RU/ONUs.
double energy_cost_per_year(const UnitCounts& units, const CostTable& costs);

/// Yearly operation & maintenance: fraction of the capex basis plus
/// software license renewals.
double om_cost_per_year(double capex_basis, const CostTable& costs);

/// Yearly rent for n_cell_sites cell sites.
double site_rental_cost_per_year(long n_cell_sites, const CostTable& costs);

/// Evaluates the full TCO model over a plan. This is the canonical cost
/// path: solver objectives and verification reports are defined as the
/// value computed here. Throws StructuralError when the plan references
/// unknown sites. Topology feasibility is not checked here; use
/// total_cost_verified (ilp.hpp) for the rejecting variant.
CostReport total_cost(const DeploymentPlan& plan, const PlanningInstance& inst);
CostReport total_cost(const DeploymentPlan& plan, const PlanningInstance& inst,
                      const DistanceMatrix& dm);

/// Two-column (component, value) breakdown matching the report fields.
std::string report_to_csv(const CostReport& report);

}  // namespace ponplan
