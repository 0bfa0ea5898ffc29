#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcroute {

/// Thrown when a caller violates a documented precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Grid intersection. x is the column, y is the row; origin is top-left.
struct Vertex {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);

int manhattan(const Vertex& a, const Vertex& b) noexcept;

/// Rectangular 4-connected grid with a set of blocked cells.
///
/// Obstacles are stored as a dense row-major mask; `obstacles()` returns them
/// sorted lexicographically by (x, y).
class GridMap {
 public:
  GridMap(int width, int height, const std::vector<Vertex>& obstacles = {});

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t vertex_count() const noexcept { return mask_.size(); }

  bool in_bounds(const Vertex& v) const noexcept {
    return v.x >= 0 && v.y >= 0 && v.x < width_ && v.y < height_;
  }
  bool is_obstacle(const Vertex& v) const noexcept { return mask_[index(v)] != 0; }
  bool is_obstacle(std::size_t idx) const noexcept { return mask_[idx] != 0; }

  std::size_t index(const Vertex& v) const noexcept {
    return static_cast<std::size_t>(v.y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(v.x);
  }
  Vertex vertex(std::size_t idx) const noexcept {
    return {static_cast<int>(idx % static_cast<std::size_t>(width_)),
            static_cast<int>(idx / static_cast<std::size_t>(width_))};
  }

  std::vector<Vertex> obstacles() const;
  std::size_t obstacle_count() const noexcept { return obstacle_count_; }
  const std::vector<std::uint8_t>& obstacle_mask() const noexcept { return mask_; }

  friend bool operator==(const GridMap&, const GridMap&) = default;

 private:
  int width_;
  int height_;
  std::size_t obstacle_count_ = 0;
  std::vector<std::uint8_t> mask_;
};

/// In-bounds, non-obstacle 4-neighbors of v in the order up, down, left, right.
std::vector<Vertex> neighbors(const GridMap& grid, const Vertex& v);

struct Net {
  Vertex start;
  Vertex end;

  friend bool operator==(const Net&, const Net&) = default;
};

/// A grid plus an ordered list of two-pin nets. Construction validates that
/// all pins are in bounds, off obstacles and pairwise distinct.
class ProblemInstance {
 public:
  ProblemInstance(GridMap grid, std::vector<Net> nets);

  const GridMap& grid() const noexcept { return grid_; }
  const std::vector<Net>& nets() const noexcept { return nets_; }
  std::size_t net_count() const noexcept { return nets_.size(); }

  /// Mask over grid vertices: 1 where some net has a pin.
  const std::vector<std::uint8_t>& pin_mask() const noexcept { return pin_mask_; }

  friend bool operator==(const ProblemInstance& a, const ProblemInstance& b) {
    return a.grid_ == b.grid_ && a.nets_ == b.nets_;
  }

 private:
  GridMap grid_;
  std::vector<Net> nets_;
  std::vector<std::uint8_t> pin_mask_;
};

struct Path {
  std::vector<Vertex> vertices;

  /// Edge count; a single-vertex path has length 0.
  std::int64_t length() const noexcept {
    return vertices.empty() ? 0 : static_cast<std::int64_t>(vertices.size()) - 1;
  }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Per-net routing result. `paths[i]` is empty when net i failed.
struct RoutingOutcome {
  std::vector<std::optional<Path>> paths;

  std::size_t connected_count() const noexcept;
  bool fully_connected() const noexcept { return connected_count() == paths.size(); }
  /// Sum of edge counts, present only when every net is connected.
  std::optional<std::int64_t> total_length() const;

  friend bool operator==(const RoutingOutcome&, const RoutingOutcome&) = default;
};

}  // namespace rcroute
