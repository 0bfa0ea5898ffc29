#pragma once

// Ranking Cost solver: nets are routed one after another by A*, in an order
// given by a learned ranking vector, with learned per-net cost maps steering
// the earlier nets away from space the later nets need. Both parameter
// blocks are trained per instance with evolution strategies.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcroute/astar.hpp"
#include "rcroute/es.hpp"
#include "rcroute/grid.hpp"

namespace rcroute {

enum class TrainingMode {
  kFull,         // ranking and cost maps
  kRankingOnly,  // cost maps fixed at zero
  kCostOnly,     // order fixed to declaration order
};

const char* to_string(TrainingMode mode) noexcept;
/// Accepts "full", "ranking_only", "cost_only". Throws InputError otherwise.
TrainingMode parse_training_mode(const std::string& text);

/// One ranking score per net; higher routes earlier.
struct RankingParams {
  std::vector<double> beta;
};

/// Row-major k x m raw cost parameters, row i belonging to net i.
struct CostMapParams {
  std::size_t nets = 0;
  std::size_t vertices = 0;
  std::vector<double> raw;

  std::span<const double> row(std::size_t net) const {
    return std::span<const double>(raw).subspan(net * vertices, vertices);
  }
};

struct SolverParams {
  RankingParams ranking;
  CostMapParams cost;
};

struct SolverConfig {
  TrainingMode mode = TrainingMode::kFull;
  /// Population, learning rate, generations, seed, threads. noise_scales is
  /// rebuilt by solve() from sigma_ranking / sigma_cost.
  ESConfig es;
  double sigma_ranking = 0.1;
  double sigma_cost = 0.1;
  bool post_process = false;
  double failure_reward = -1.0;
  double length_upper_bound_factor = 1.0;
  /// Grade failures by connected fraction in [-1, -0.5) and compress
  /// successes into [-0.5, 0]. Off by default.
  bool shaped_failures = false;
};

/// Net indices sorted by beta descending; equal scores keep index order.
std::vector<std::size_t> order_from_ranking(std::span<const double> beta);

/// Elementwise max(0, raw), one field per net.
std::vector<CostField> cost_maps_from_params(const CostMapParams& params);

/// Cost field for the net at 0-based routing position `position`: the sum of
/// the cost maps of every net routed after it. The last position gets zeros.
CostField staged_cost_field(std::span<const CostField> cost_maps,
                            std::span<const std::size_t> order, std::size_t position);

/// Routes nets in `order`. A net may not enter obstacles, earlier paths, or
/// any pin of another net. Routing continues past failures. `cost_maps` may be
/// empty, meaning all-zero maps.
RoutingOutcome sequential_route(const ProblemInstance& instance,
                                std::span<const std::size_t> order,
                                std::span<const CostField> cost_maps);

/// Scaled reward in [-1, 0]; higher is better.
double reward(const RoutingOutcome& outcome, const ProblemInstance& instance,
              const SolverConfig& config);

/// Shortens a valid, fully connected outcome by re-routing one path at a time
/// with plain A* while the others stay fixed, keeping strict improvements,
/// until a full pass changes nothing. Throws InputError for invalid input.
RoutingOutcome post_process(const ProblemInstance& instance, const RoutingOutcome& outcome);

struct SolveResult {
  RoutingOutcome outcome;      // after post-processing when enabled
  RoutingOutcome raw_outcome;  // straight from the best candidate
  SolverParams params;         // best candidate's parameters
  std::vector<std::size_t> order;
  double best_reward = 0.0;
  long best_generation = -1;
  std::vector<GenerationStats> history;
};

/// Trains (ranking, cost maps) from zeros and returns the routing of the
/// best candidate seen. Deterministic in (instance, config).
SolveResult solve(const ProblemInstance& instance, const SolverConfig& config,
                  const GenerationCallback& callback = {});

/// Evaluates a flat parameter vector laid out for `mode`: [beta (k)] then
/// [raw cost (k*m)], omitting blocks the mode does not train.
class CandidateEvaluator {
 public:
  CandidateEvaluator(const ProblemInstance& instance, TrainingMode mode);

  std::size_t dimension() const noexcept;
  bool trains_ranking() const noexcept { return mode_ != TrainingMode::kCostOnly; }
  bool trains_cost() const noexcept { return mode_ != TrainingMode::kRankingOnly; }

  std::vector<std::size_t> order(std::span<const double> flat) const;
  /// Thread-safe; uses per-thread scratch buffers.
  RoutingOutcome route(std::span<const double> flat) const;
  SolverParams unpack(std::span<const double> flat) const;

 private:
  const ProblemInstance& instance_;
  TrainingMode mode_;
};

}  // namespace rcroute
