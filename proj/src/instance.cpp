// SPDX-License-Identifier: Apache-2.0
#include "ponplan/instance.hpp"

#include "ponplan/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace ponplan {

namespace {

constexpr double kCranDelayBudgetUs = 50.0;

bool finite(double v) { return std::isfinite(v); }

void check_sites(const std::vector<Site>& sites, const char* set_name,
                 SiteKind kind, std::vector<std::string>& errors) {
  if (sites.empty()) {
    errors.push_back(std::string("empty set ") + set_name);
    return;
  }
  std::set<std::string> seen;
  for (const auto& s : sites) {
    if (s.id.empty()) {
      errors.push_back(std::string(set_name) + ": site with empty id");
    }
    if (s.kind != kind) {
      errors.push_back(std::string(set_name) + ": site '" + s.id +
                       "' has kind " + to_string(s.kind));
    }
    if (!finite(s.x_km) || !finite(s.y_km)) {
      errors.push_back(std::string(set_name) + ": site '" + s.id +
                       "' has non-finite coordinates");
    }
    if (!seen.insert(s.id).second) {
      errors.push_back(std::string(set_name) + ": duplicate site id '" + s.id + "'");
    }
  }
}

void check_positive(double v, const char* name, std::vector<std::string>& errors) {
  if (!finite(v) || v <= 0.0) {
    std::ostringstream os;
    os << name << " must be strictly positive (got " << v << ")";
    errors.push_back(os.str());
  }
}

void check_non_negative(double v, const char* name,
                        std::vector<std::string>& errors) {
  if (!finite(v) || v < 0.0) {
    std::ostringstream os;
    os << name << " must be non-negative (got " << v << ")";
    errors.push_back(os.str());
  }
}

}  // namespace

const char* to_string(D1Side side) {
  return side == D1Side::Distribution ? "distribution" : "feeder";
}

const char* to_string(OmBasis basis) {
  return basis == OmBasis::Equipment ? "equipment" : "total_capex";
}

double CostTable::splitter_cost(int ratio) const {
  auto it = splitter_by_ratio.find(ratio);
  if (it == splitter_by_ratio.end()) {
    throw ConfigError("no splitter cost configured for ratio 1:" +
                      std::to_string(ratio));
  }
  return it->second;
}

std::unordered_map<std::string, int> index_by_id(const std::vector<Site>& sites) {
  std::unordered_map<std::string, int> index;
  index.reserve(sites.size());
  for (size_t k = 0; k < sites.size(); ++k) {
    index.emplace(sites[k].id, static_cast<int>(k));
  }
  return index;
}

ValidationReport validate_instance(const PlanningInstance& inst) {
  ValidationReport report;
  auto& errors = report.errors;

  check_sites(inst.central_office_sites, "C", SiteKind::CentralOffice, errors);
  check_sites(inst.splitter_sites, "S", SiteKind::Splitter, errors);
  check_sites(inst.ru_onu_sites, "R", SiteKind::RuOnu, errors);

  const ModelParams& p = inst.params;
  if (p.split_ratio != 4 && p.split_ratio != 8 && p.split_ratio != 16) {
    if (p.allow_nonstandard_ratio) {
      if (p.split_ratio < 1) {
        errors.push_back("split_ratio must be a positive integer");
      }
    } else {
      errors.push_back("split_ratio must be one of {4, 8, 16} "
                       "(set allow_nonstandard_ratio to override)");
    }
  }
  if (p.max_dos_per_co < 1) {
    errors.push_back("max_dos_per_co must be at least 1");
  }
  check_positive(p.delay_per_km, "delay_per_km", errors);
  check_positive(p.max_delay, "max_delay", errors);
  check_positive(p.max_distribution_fiber, "max_distribution_fiber", errors);
  check_positive(p.max_total_distance, "max_total_distance", errors);
  check_positive(p.pon_downlink, "pon_downlink", errors);
  check_positive(p.pon_uplink, "pon_uplink", errors);
  check_positive(p.ru_downlink, "ru_downlink", errors);
  check_positive(p.ru_uplink, "ru_uplink", errors);
  check_positive(p.routing_factor, "routing_factor", errors);
  if (p.horizon_years < 0) {
    errors.push_back("horizon_years must be non-negative");
  }
  if (p.ru_downlink > p.pon_downlink) {
    errors.push_back("ru_downlink exceeds pon_downlink");
  }
  if (p.ru_uplink > p.pon_uplink) {
    errors.push_back("ru_uplink exceeds pon_uplink");
  }
  if (p.max_delay > kCranDelayBudgetUs) {
    std::ostringstream os;
    os << "max_delay " << p.max_delay << " us exceeds the " << kCranDelayBudgetUs
       << " us fronthaul budget";
    report.warnings.push_back(os.str());
  }

  const CostTable& c = inst.costs;
  check_non_negative(c.co_housing, "co_housing", errors);
  check_non_negative(c.do_unit, "do_unit", errors);
  check_non_negative(c.awg, "awg", errors);
  check_non_negative(c.ru_onu, "ru_onu", errors);
  check_non_negative(c.fiber_per_m, "fiber_per_m", errors);
  check_non_negative(c.yearly_site_rent, "yearly_site_rent", errors);
  check_non_negative(c.electricity_price, "electricity_price", errors);
  check_non_negative(c.power_do, "power_do", errors);
  check_non_negative(c.power_cooling, "power_cooling", errors);
  check_non_negative(c.power_ru_onu, "power_ru_onu", errors);
  check_non_negative(c.install_time_per_link, "install_time_per_link", errors);
  check_non_negative(c.travel_time, "travel_time", errors);
  check_non_negative(c.technician_salary, "technician_salary", errors);
  check_non_negative(c.software_license, "software_license", errors);
  if (c.technician_count < 0) {
    errors.push_back("technician_count must be non-negative");
  }
  if (!finite(c.om_fraction) || c.om_fraction < 0.0 || c.om_fraction > 1.0) {
    errors.push_back("om_fraction must lie in [0, 1]");
  }
  for (const auto& [ratio, cost] : c.splitter_by_ratio) {
    if (ratio < 1) {
      errors.push_back("splitter_by_ratio: ratio keys must be positive");
    }
    if (!finite(cost) || cost < 0.0) {
      errors.push_back("splitter_by_ratio[1:" + std::to_string(ratio) +
                       "] must be non-negative");
    }
  }
  if (c.splitter_by_ratio.find(p.split_ratio) == c.splitter_by_ratio.end()) {
    errors.push_back("no splitter cost configured for the instance ratio 1:" +
                     std::to_string(p.split_ratio));
  }

  return report;
}

DistanceMatrix compute_distances(const PlanningInstance& inst) {
  DistanceMatrix dm;
  dm.co_splitter = pairwise_distances_km(site_positions(inst.central_office_sites),
                                         site_positions(inst.splitter_sites),
                                         inst.params.routing_factor);
  dm.splitter_ru = pairwise_distances_km(site_positions(inst.splitter_sites),
                                         site_positions(inst.ru_onu_sites),
                                         inst.params.routing_factor);
  return dm;
}

std::vector<std::string> feasibility_precheck(const PlanningInstance& inst,
                                              const DistanceMatrix& dm) {
  const ModelParams& p = inst.params;
  std::vector<std::string> failures;
  const Eigen::Index n_cos = dm.co_splitter.rows();
  const Eigen::Index n_sps = dm.co_splitter.cols();
  // eq24/eq26 bound the delay and total length of an active path; eq25
  // bounds one configured side of it.
  const double max_path_km =
      std::min(p.max_total_distance, p.max_delay / p.delay_per_km);
  for (Eigen::Index r = 0; r < dm.splitter_ru.cols(); ++r) {
    bool ok = false;
    double best_path = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < n_sps && !ok; ++j) {
      const double d_jr = dm.splitter_ru(j, r);
      if (p.d1_applies_to == D1Side::Distribution &&
          d_jr > p.max_distribution_fiber + 1e-9) {
        continue;
      }
      for (Eigen::Index i = 0; i < n_cos; ++i) {
        const double d_ij = dm.co_splitter(i, j);
        if (p.d1_applies_to == D1Side::Feeder &&
            d_ij > p.max_distribution_fiber + 1e-9) {
          continue;
        }
        const double path = d_ij + d_jr;
        best_path = std::min(best_path, path);
        if (path <= max_path_km + 1e-9) {
          ok = true;
          break;
        }
      }
    }
    if (!ok) {
      std::ostringstream os;
      os << "RU/ONU '" << inst.ru_onu_sites[static_cast<size_t>(r)].id
         << "' has no feasible (splitter, CO) pair: ";
      if (std::isinf(best_path)) {
        os << "no splitter within max_distribution_fiber="
           << p.max_distribution_fiber << " km (" << to_string(p.d1_applies_to)
           << " side)";
      } else {
        os << "shortest admissible path " << best_path << " km exceeds the "
           << max_path_km << " km limit implied by max_delay=" << p.max_delay
           << " us and max_total_distance=" << p.max_total_distance << " km";
      }
      failures.push_back(os.str());
    }
  }
  return failures;
}

}  // namespace ponplan
