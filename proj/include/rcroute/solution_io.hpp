#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rcroute/es.hpp"
#include "rcroute/grid.hpp"

namespace rcroute {

/// A routing result as stored on disk.
struct Solution {
  RoutingOutcome outcome;
  std::vector<std::size_t> order;  // routing order, 0-based net indices
};

/// Canonical solution document (version 1): net count, connected count,
/// total length (null unless fully connected), routing order and per-net
/// vertex lists with success flags.
std::string save_solution(const Solution& solution);
/// Throws InstanceError(kSyntax / kSchema) on malformed input.
Solution load_solution(std::string_view text);

/// One JSON object per line: generation, best, mean, min reward, plus
/// wallclock seconds when `with_timing` is set.
std::string format_training_log(std::span<const GenerationStats> history, bool with_timing);

}  // namespace rcroute
