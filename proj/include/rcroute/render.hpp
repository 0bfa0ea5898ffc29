#pragma once

#include <optional>
#include <string>

#include "rcroute/grid.hpp"

namespace rcroute {

/// One character per cell: '#' obstacle, '.' free, the net's uppercase
/// letter on both pins and its lowercase letter along its path (letters
/// cycle every 26 nets). A legend line per net follows the grid.
std::string render_ascii(const ProblemInstance& instance,
                         const std::optional<RoutingOutcome>& outcome = std::nullopt);

/// Standalone SVG document: obstacles black, start pins yellow, end pins
/// green, one colored polyline per routed net.
std::string render_svg(const ProblemInstance& instance,
                       const std::optional<RoutingOutcome>& outcome = std::nullopt);

/// Throws InputError if the outcome does not belong to the instance (wrong
/// net count, or paths that are malformed or overlap).
void check_outcome_matches(const ProblemInstance& instance, const RoutingOutcome& outcome);

}  // namespace rcroute
