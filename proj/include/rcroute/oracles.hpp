#pragma once

// Reference searches used to check the A* router. Deliberately simple.

#include <cstdint>
#include <optional>
#include <vector>

#include "rcroute/astar.hpp"
#include "rcroute/grid.hpp"

namespace rcroute {

/// Unweighted shortest-path edge count by breadth-first search.
std::optional<std::int64_t> bfs_oracle(const GridMap& grid, const Net& net,
                                       const std::vector<Vertex>& blocked);

/// Minimal accumulated cost (1 + cost per entered vertex) by uniform-cost search.
std::optional<double> dijkstra_oracle(const GridMap& grid, const RouteRequest& request);

}  // namespace rcroute
