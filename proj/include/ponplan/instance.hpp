// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ponplan/geometry.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace ponplan {

/// Which fiber segment the distribution-length limit applies to.
enum class D1Side { Distribution, Feeder };

/// Basis of the yearly operation & maintenance fraction.
enum class OmBasis { Equipment, TotalCapex };

const char* to_string(D1Side side);
const char* to_string(OmBasis basis);

/// Network parameters. Canonical units: km, microseconds, Gb/s, years.
struct ModelParams {
  int split_ratio = 16;                // eta, RU/ONUs a splitter fans out to
  int max_dos_per_co = 10;             // H, DO slots per central office
  double delay_per_km = 5.0;           // tau, us per km of fiber
  double max_delay = 50.0;             // tau_max, us, RU/ONU -> CO
  double max_distribution_fiber = 5.0; // d1_max, km
  double max_total_distance = 20.0;    // d_max, km, RU/ONU -> CO
  double pon_downlink = 40.0;          // theta_D, Gb/s
  double pon_uplink = 40.0;            // theta_U, Gb/s
  double ru_downlink = 2.5;            // theta_rd, Gb/s per RU/ONU
  double ru_uplink = 2.5;              // theta_ru, Gb/s per RU/ONU
  int horizon_years = 1;               // N_r, Opex multiplier in the TCO
  double routing_factor = 1.0;         // street-routing approximation knob
  bool allow_nonstandard_ratio = false;
  D1Side d1_applies_to = D1Side::Distribution;
};

/// Unit costs and power draws. Canonical units: dollars, $/kWh, Wh, hours.
struct CostTable {
  double co_housing = 0.0;               // $/central office
  double do_unit = 0.0;                  // $/DO (DU+CU with OLT)
  double awg = 0.0;                      // $/AWG
  std::map<int, double> splitter_by_ratio;  // ratio -> $/splitter
  double ru_onu = 0.0;                   // $/RU+ONU
  double fiber_per_m = 0.0;              // $/m, material + civil work
  double yearly_site_rent = 0.0;         // $/cell site/year
  double electricity_price = 0.0;        // $/kWh
  double om_fraction = 0.0;              // yearly fraction of capex basis
  OmBasis om_basis = OmBasis::Equipment;
  double power_do = 0.0;                 // Wh
  double power_cooling = 0.0;            // Wh, one cooling system per DO
  double power_ru_onu = 0.0;             // Wh
  double install_time_per_link = 0.0;    // T_i, hours
  double travel_time = 0.0;              // T_t, hours, one-way
  double technician_salary = 0.0;        // TS, $/hour
  int technician_count = 0;              // TN
  double software_license = 0.0;         // S_lic, $/year

  /// Unit cost of a splitter at the given ratio; throws ConfigError when
  /// the table has no entry for it.
  double splitter_cost(int ratio) const;
};

/// Immutable problem description: candidate sites plus all parameters.
struct PlanningInstance {
  std::vector<Site> central_office_sites;
  std::vector<Site> splitter_sites;
  std::vector<Site> ru_onu_sites;
  ModelParams params;
  CostTable costs;
};

/// id -> position lookup for one site list.
std::unordered_map<std::string, int> index_by_id(const std::vector<Site>& sites);

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool ok() const { return errors.empty(); }
};

/// Checks every instance invariant and returns all failures at once.
/// Does not run the feasibility pre-check (see feasibility_precheck).
ValidationReport validate_instance(const PlanningInstance& inst);

DistanceMatrix compute_distances(const PlanningInstance& inst);

/// Necessary-condition screen run before solving: every RU/ONU must have at
/// least one (splitter, CO) pair within the delay and distance limits.
/// Returns one message per RU/ONU that has none.
std::vector<std::string> feasibility_precheck(const PlanningInstance& inst,
                                              const DistanceMatrix& dm);

}  // namespace ponplan
