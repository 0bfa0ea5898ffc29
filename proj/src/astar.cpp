#include "rcroute/astar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace rcroute {

CostField::CostField(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] >= 0.0) || !std::isfinite(values_[i])) {
      throw InputError("cost field entry " + std::to_string(i) + " must be finite and >= 0");
    }
  }
}

bool CostField::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

std::optional<RouteResult> AStarRouter::route(const GridMap& grid, const Net& net,
                                              std::span<const std::uint8_t> unavailable,
                                              std::span<const double> cost) {
  const std::size_t m = grid.vertex_count();
  if (g_.size() != m) {
    g_.assign(m, 0.0);
    parent_.assign(m, -1);
    seen_stamp_.assign(m, 0);
    closed_stamp_.assign(m, 0);
    stamp_ = 0;
  }
  if (++stamp_ == 0) {
    std::fill(seen_stamp_.begin(), seen_stamp_.end(), 0);
    std::fill(closed_stamp_.begin(), closed_stamp_.end(), 0);
    stamp_ = 1;
  }
  expansions_ = 0;
  heap_.clear();

  const int width = grid.width();
  const int height = grid.height();
  const auto source = static_cast<std::uint32_t>(grid.index(net.start));
  const auto target = static_cast<std::uint32_t>(grid.index(net.end));
  const int tx = net.end.x;
  const int ty = net.end.y;
  const bool weighted = !cost.empty();

  // Min-heap on f, then max on g, then min on insertion sequence.
  auto worse = [](const Entry& a, const Entry& b) {
    if (a.f != b.f) return a.f > b.f;
    if (a.g != b.g) return a.g < b.g;
    return a.seq > b.seq;
  };
  std::uint64_t seq = 0;
  auto push = [&](std::uint32_t node, double g, int x, int y) {
    const double h = static_cast<double>(std::abs(x - tx) + std::abs(y - ty));
    heap_.push_back({g + h, g, seq++, node});
    std::push_heap(heap_.begin(), heap_.end(), worse);
  };

  g_[source] = 0.0;
  parent_[source] = -1;
  seen_stamp_[source] = stamp_;
  push(source, 0.0, net.start.x, net.start.y);

  static constexpr int kDx[4] = {0, 0, -1, 1};
  static constexpr int kDy[4] = {-1, 1, 0, 0};

  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end(), worse);
    const Entry top = heap_.back();
    heap_.pop_back();
    const std::uint32_t u = top.node;
    if (closed_stamp_[u] == stamp_ || top.g > g_[u]) continue;
    closed_stamp_[u] = stamp_;
    ++expansions_;

    if (u == target) {
      RouteResult result;
      result.cost = g_[u];
      for (std::int32_t v = static_cast<std::int32_t>(u); v != -1; v = parent_[v]) {
        result.path.vertices.push_back(grid.vertex(static_cast<std::size_t>(v)));
      }
      std::reverse(result.path.vertices.begin(), result.path.vertices.end());
      return result;
    }

    const int ux = static_cast<int>(u % static_cast<std::uint32_t>(width));
    const int uy = static_cast<int>(u / static_cast<std::uint32_t>(width));
    for (int d = 0; d < 4; ++d) {
      const int nx = ux + kDx[d];
      const int ny = uy + kDy[d];
      if (nx < 0 || ny < 0 || nx >= width || ny >= height) continue;
      const auto v = static_cast<std::uint32_t>(ny * width + nx);
      if (unavailable[v] != 0 || closed_stamp_[v] == stamp_) continue;
      const double g = top.g + 1.0 + (weighted ? cost[v] : 0.0);
      if (seen_stamp_[v] == stamp_ && g >= g_[v]) continue;
      seen_stamp_[v] = stamp_;
      g_[v] = g;
      parent_[v] = static_cast<std::int32_t>(u);
      push(v, g, nx, ny);
    }
  }
  return std::nullopt;
}

std::optional<RouteResult> route(const RouteRequest& request) {
  const GridMap& grid = request.grid;
  const Net& net = request.net;
  for (const Vertex& pin : {net.start, net.end}) {
    if (!grid.in_bounds(pin)) throw InputError("pin " + to_string(pin) + " is out of bounds");
    if (grid.is_obstacle(pin)) throw InputError("pin " + to_string(pin) + " is an obstacle");
  }
  if (net.start == net.end) throw InputError("net start and end coincide");
  if (request.cost_field.size() != grid.vertex_count()) {
    throw InputError("cost field has " + std::to_string(request.cost_field.size()) +
                     " entries, grid has " + std::to_string(grid.vertex_count()));
  }
  std::vector<std::uint8_t> unavailable = grid.obstacle_mask();
  for (const Vertex& b : request.blocked) {
    if (!grid.in_bounds(b)) throw InputError("blocked vertex " + to_string(b) + " is out of bounds");
    if (b == net.start || b == net.end) {
      throw InputError("pin " + to_string(b) + " is marked blocked");
    }
    unavailable[grid.index(b)] = 1;
  }
  AStarRouter router;
  return router.route(grid, net, unavailable, request.cost_field.values());
}

}  // namespace rcroute
