#include "rcroute/oracles.hpp"

#include <deque>
#include <functional>
#include <limits>
#include <queue>
#include <set>

namespace rcroute {

std::optional<std::int64_t> bfs_oracle(const GridMap& grid, const Net& net,
                                       const std::vector<Vertex>& blocked) {
  const std::set<Vertex> closed(blocked.begin(), blocked.end());
  std::vector<std::int64_t> dist(grid.vertex_count(), -1);
  std::deque<Vertex> frontier{net.start};
  dist[grid.index(net.start)] = 0;
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop_front();
    if (u == net.end) return dist[grid.index(u)];
    for (const Vertex& v : neighbors(grid, u)) {
      if (closed.contains(v) || dist[grid.index(v)] >= 0) continue;
      dist[grid.index(v)] = dist[grid.index(u)] + 1;
      frontier.push_back(v);
    }
  }
  return std::nullopt;
}

std::optional<double> dijkstra_oracle(const GridMap& grid, const RouteRequest& request) {
  const std::set<Vertex> closed(request.blocked.begin(), request.blocked.end());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(grid.vertex_count(), inf);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
  dist[grid.index(request.net.start)] = 0.0;
  open.push({0.0, grid.index(request.net.start)});
  const std::size_t target = grid.index(request.net.end);
  while (!open.empty()) {
    auto [d, u] = open.top();
    open.pop();
    if (d > dist[u]) continue;
    if (u == target) return d;
    for (const Vertex& v : neighbors(grid, grid.vertex(u))) {
      if (closed.contains(v)) continue;
      const std::size_t vi = grid.index(v);
      const double nd = d + 1.0 + request.cost_field[vi];
      if (nd < dist[vi]) {
        dist[vi] = nd;
        open.push({nd, vi});
      }
    }
  }
  return std::nullopt;
}

}  // namespace rcroute
