// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ponplan/instance.hpp"
#include "ponplan/plan.hpp"

#include <string>

namespace ponplan {

enum class MarkerKind { Dot, Square, Lozenge };

/// Styling of the deployment map. Marker kinds must be pairwise distinct
/// and the scale positive.
struct RenderStyle {
  MarkerKind ru_marker = MarkerKind::Dot;
  MarkerKind splitter_marker = MarkerKind::Square;
  MarkerKind co_marker = MarkerKind::Lozenge;
  double px_per_km = 64.0;
  double margin_px = 48.0;
  bool legend = true;
};

/// Renders instance + plan as a deterministic SVG document: one marker per
/// site (open sites filled, unused candidates hollow), one solid line per
/// distribution link, one dashed line per feeder link, legend and scale
/// bar. Zero-length links are suppressed. Throws StructuralError when the
/// plan references unknown sites, ConfigError on an invalid style.
std::string render_map(const PlanningInstance& inst, const DeploymentPlan& plan,
                       const RenderStyle& style = {});

}  // namespace ponplan
