// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace ponplan {

enum class SiteKind { CentralOffice, Splitter, RuOnu };

const char* to_string(SiteKind kind);
SiteKind site_kind_from_string(const std::string& s);

/// A candidate location. Coordinates are planar kilometers.
struct Site {
  std::string id;
  SiteKind kind = SiteKind::RuOnu;
  double x_km = 0.0;
  double y_km = 0.0;

  Eigen::Vector2d xy() const { return {x_km, y_km}; }
};

// Distances are snapped to a 1e-6 km grid so that model coefficients are
// reproducible regardless of how the instance was produced.
double round_km(double km);

double euclidean_km(const Site& a, const Site& b, double routing_factor = 1.0);

/// Column k of the result holds the position of sites[k].
Eigen::Matrix2Xd site_positions(const std::vector<Site>& sites);

/// Pairwise distances in km between two point sets: entry (i, j) is the
/// distance from a.col(i) to b.col(j), scaled by routing_factor and snapped
/// to the 1e-6 km grid.
Eigen::MatrixXd pairwise_distances_km(const Eigen::Matrix2Xd& a,
                                      const Eigen::Matrix2Xd& b,
                                      double routing_factor = 1.0);

/// Link-length matrices of a planning instance.
struct DistanceMatrix {
  Eigen::MatrixXd co_splitter;  // (|C| x |S|), feeder side
  Eigen::MatrixXd splitter_ru;  // (|S| x |R|), distribution side
};

/// One-way propagation delay in microseconds of a feeder + distribution
/// path. Hardware contributions (serialization, queueing, processing) are
/// modeled as zero; only fiber propagation counts.
double path_delay_us(double feeder_km, double distribution_km,
                     double delay_per_km_us);

}  // namespace ponplan
