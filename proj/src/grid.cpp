#include "rcroute/grid.hpp"

#include <cstdlib>

namespace rcroute {

std::string to_string(const Vertex& v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

int manhattan(const Vertex& a, const Vertex& b) noexcept {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

GridMap::GridMap(int width, int height, const std::vector<Vertex>& obstacles)
    : width_(width), height_(height) {
  if (width <= 0 || height <= 0) {
    throw InputError("grid dimensions must be positive, got " + std::to_string(width) + "x" +
                     std::to_string(height));
  }
  mask_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
  for (const Vertex& v : obstacles) {
    if (!in_bounds(v)) {
      throw InputError("obstacle " + to_string(v) + " is out of bounds");
    }
    auto& cell = mask_[index(v)];
    if (cell == 0) {
      cell = 1;
      ++obstacle_count_;
    }
  }
}

std::vector<Vertex> GridMap::obstacles() const {
  // Column-major walk yields lexicographic (x, y) order directly.
  std::vector<Vertex> out;
  out.reserve(obstacle_count_);
  for (int x = 0; x < width_; ++x) {
    for (int y = 0; y < height_; ++y) {
      if (mask_[index({x, y})] != 0) out.push_back({x, y});
    }
  }
  return out;
}

std::vector<Vertex> neighbors(const GridMap& grid, const Vertex& v) {
  if (!grid.in_bounds(v)) {
    throw InputError("vertex " + to_string(v) + " is out of bounds");
  }
  static constexpr int kDx[4] = {0, 0, -1, 1};
  static constexpr int kDy[4] = {-1, 1, 0, 0};
  std::vector<Vertex> out;
  out.reserve(4);
  for (int d = 0; d < 4; ++d) {
    Vertex n{v.x + kDx[d], v.y + kDy[d]};
    if (grid.in_bounds(n) && !grid.is_obstacle(n)) out.push_back(n);
  }
  return out;
}

ProblemInstance::ProblemInstance(GridMap grid, std::vector<Net> nets)
    : grid_(std::move(grid)), nets_(std::move(nets)) {
  pin_mask_.assign(grid_.vertex_count(), 0);
  for (std::size_t i = 0; i < nets_.size(); ++i) {
    for (const Vertex& pin : {nets_[i].start, nets_[i].end}) {
      if (!grid_.in_bounds(pin)) {
        throw InputError("net " + std::to_string(i) + " pin " + to_string(pin) +
                         " is out of bounds");
      }
      if (grid_.is_obstacle(pin)) {
        throw InputError("net " + std::to_string(i) + " pin " + to_string(pin) +
                         " lies on an obstacle");
      }
      auto& cell = pin_mask_[grid_.index(pin)];
      if (cell != 0) {
        throw InputError("net " + std::to_string(i) + " pin " + to_string(pin) +
                         " duplicates another pin");
      }
      cell = 1;
    }
  }
}

std::size_t RoutingOutcome::connected_count() const noexcept {
  std::size_t n = 0;
  for (const auto& p : paths) n += p.has_value() ? 1 : 0;
  return n;
}

std::optional<std::int64_t> RoutingOutcome::total_length() const {
  std::int64_t total = 0;
  for (const auto& p : paths) {
    if (!p) return std::nullopt;
    total += p->length();
  }
  return total;
}

}  // namespace rcroute
