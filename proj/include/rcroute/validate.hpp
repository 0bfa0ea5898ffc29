#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcroute/grid.hpp"

namespace rcroute {

struct NetReport {
  bool present = false;
  bool endpoints_match = false;
  bool contiguous = false;       // every step moves to a 4-neighbor
  bool in_bounds = false;
  bool avoids_obstacles = false;
  bool simple = false;           // no repeated vertex
  bool avoids_foreign_pins = false;
  std::int64_t length = 0;

  bool ok() const noexcept {
    return present && endpoints_match && contiguous && in_bounds && avoids_obstacles && simple &&
           avoids_foreign_pins;
  }
};

struct ValidationReport {
  std::vector<NetReport> nets;
  /// Pairs (i, j), i < j, of present paths sharing at least one vertex.
  std::vector<std::pair<std::size_t, std::size_t>> overlaps;
  std::size_t connected = 0;
  std::optional<std::int64_t> total_length;
  std::vector<std::string> problems;

  /// True when every present path is well formed and paths are disjoint.
  /// Missing paths are reported but do not make a partial outcome invalid.
  bool consistent = false;
  /// consistent and all nets connected.
  bool valid = false;
};

ValidationReport validate_outcome(const ProblemInstance& instance, const RoutingOutcome& outcome);

}  // namespace rcroute
