// SPDX-License-Identifier: Apache-2.0
#include "ponplan/geometry.hpp"

#include "ponplan/errors.hpp"

#include <cmath>

namespace ponplan {

const char* to_string(SiteKind kind) {
  switch (kind) {
    case SiteKind::CentralOffice: return "central_office";
    case SiteKind::Splitter: return "splitter";
    case SiteKind::RuOnu: return "ru_onu";
  }
  return "?";
}

SiteKind site_kind_from_string(const std::string& s) {
  if (s == "central_office") return SiteKind::CentralOffice;
  if (s == "splitter") return SiteKind::Splitter;
  if (s == "ru_onu") return SiteKind::RuOnu;
  throw ParseError("unknown site kind '" + s + "'");
}

double round_km(double km) {
  return std::round(km * 1e6) / 1e6;
}

double euclidean_km(const Site& a, const Site& b, double routing_factor) {
  return round_km((a.xy() - b.xy()).norm() * routing_factor);
}

Eigen::Matrix2Xd site_positions(const std::vector<Site>& sites) {
  Eigen::Matrix2Xd pos(2, static_cast<Eigen::Index>(sites.size()));
  for (Eigen::Index k = 0; k < pos.cols(); ++k) {
    pos.col(k) = sites[static_cast<size_t>(k)].xy();
  }
  return pos;
}

Eigen::MatrixXd pairwise_distances_km(const Eigen::Matrix2Xd& a,
                                      const Eigen::Matrix2Xd& b,
                                      double routing_factor) {
  Eigen::MatrixXd d(a.cols(), b.cols());
  for (Eigen::Index i = 0; i < a.cols(); ++i) {
    d.row(i) = (b.colwise() - a.col(i)).colwise().norm();
  }
  return d.unaryExpr([routing_factor](double km) {
    return round_km(km * routing_factor);
  });
}

double path_delay_us(double feeder_km, double distribution_km,
                     double delay_per_km_us) {
  return delay_per_km_us * (feeder_km + distribution_km);
}

}  // namespace ponplan
