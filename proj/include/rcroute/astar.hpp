#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rcroute/grid.hpp"

namespace rcroute {

/// Non-negative per-vertex traversal cost, row-major over the grid.
class CostField {
 public:
  CostField() = default;
  /// Throws InputError if any entry is negative or not finite.
  explicit CostField(std::vector<double> values);

  static CostField zeros(std::size_t vertex_count) {
    CostField f;
    f.values_.assign(vertex_count, 0.0);
    return f;
  }

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  bool is_zero() const noexcept;

  friend bool operator==(const CostField&, const CostField&) = default;

 private:
  std::vector<double> values_;
};

struct RouteRequest {
  const GridMap& grid;
  Net net;
  std::vector<Vertex> blocked;  // unavailable in addition to obstacles
  const CostField& cost_field;
};

struct RouteResult {
  Path path;
  /// Sum over every entered vertex v (start excluded) of 1 + cost(v).
  double cost = 0.0;
};

/// A* search with reusable scratch buffers. Not thread-safe; use one router
/// per thread.
///
/// Priority is g + manhattan-to-target. Ties go to the larger g, then to the
/// earlier-pushed entry; neighbors are pushed up, down, left, right. Every
/// step costs at least 1, so the heuristic stays consistent for any
/// non-negative cost field and the returned path is cost-optimal.
class AStarRouter {
 public:
  /// `unavailable` flags every vertex the path may not enter (obstacles
  /// included). `cost` is either empty (all zero) or one entry per vertex.
  /// The pins must not be flagged.
  std::optional<RouteResult> route(const GridMap& grid, const Net& net,
                                   std::span<const std::uint8_t> unavailable,
                                   std::span<const double> cost);

  /// Nodes popped during the last search.
  std::size_t last_expansions() const noexcept { return expansions_; }

 private:
  struct Entry {
    double f;
    double g;
    std::uint64_t seq;
    std::uint32_t node;
  };

  std::vector<double> g_;
  std::vector<std::int32_t> parent_;
  std::vector<std::uint32_t> seen_stamp_;
  std::vector<std::uint32_t> closed_stamp_;
  std::vector<Entry> heap_;
  std::uint32_t stamp_ = 0;
  std::size_t expansions_ = 0;
};

/// Routes a single validated request. Throws InputError when the request
/// breaks its preconditions (pins out of bounds, on obstacles or blocked,
/// start == end, cost field of the wrong size).
std::optional<RouteResult> route(const RouteRequest& request);

}  // namespace rcroute
