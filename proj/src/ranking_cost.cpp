#include "rcroute/ranking_cost.hpp"

#include <algorithm>
#include <numeric>

#include "rcroute/validate.hpp"

namespace rcroute {
namespace {

struct Scratch {
  AStarRouter router;
  std::vector<double> staged;  // k x m, row p = field for routing position p
  std::vector<std::uint8_t> unavailable;
};

Scratch& thread_scratch() {
  thread_local Scratch scratch;
  return scratch;
}

void mark_path(std::vector<std::uint8_t>& mask, const GridMap& grid, const Path& path) {
  for (const Vertex& v : path.vertices) mask[grid.index(v)] = 1;
}

/// Routes nets in order using precomputed staged fields (empty = all zero).
RoutingOutcome route_staged(const ProblemInstance& instance, std::span<const std::size_t> order,
                            std::span<const double> staged, Scratch& scratch) {
  const GridMap& grid = instance.grid();
  const std::size_t m = grid.vertex_count();
  const auto& nets = instance.nets();

  auto& mask = scratch.unavailable;
  mask = grid.obstacle_mask();
  for (std::size_t i = 0; i < m; ++i) mask[i] |= instance.pin_mask()[i];

  RoutingOutcome outcome;
  outcome.paths.resize(nets.size());
  for (std::size_t p = 0; p < order.size(); ++p) {
    const std::size_t net = order[p];
    const std::size_t s = grid.index(nets[net].start);
    const std::size_t e = grid.index(nets[net].end);
    mask[s] = 0;
    mask[e] = 0;
    std::span<const double> field;
    if (!staged.empty()) field = staged.subspan(p * m, m);
    auto found = scratch.router.route(grid, nets[net], mask, field);
    mask[s] = 1;
    mask[e] = 1;
    if (found) {
      mark_path(mask, grid, found->path);
      outcome.paths[net] = std::move(found->path);
    }
  }
  return outcome;
}

/// Fills staged rows from the back: row k-1 is zero, row p = row p+1 plus the
/// map of the net at position p+1. `map_row(net)` points at that net's m
/// values; negatives are clamped to zero when `clamp` is set.
template <typename MapRow>
void build_staged(std::vector<double>& staged, std::span<const std::size_t> order, std::size_t m,
                  bool clamp, MapRow&& map_row) {
  const std::size_t k = order.size();
  staged.resize(k * m);
  std::fill_n(staged.data() + (k - 1) * m, m, 0.0);
  for (std::size_t p = k - 1; p-- > 0;) {
    double* __restrict row = staged.data() + p * m;
    const double* __restrict next = row + m;
    const double* __restrict src = map_row(order[p + 1]);
    if (clamp) {
      for (std::size_t v = 0; v < m; ++v) row[v] = next[v] + (src[v] > 0.0 ? src[v] : 0.0);
    } else {
      for (std::size_t v = 0; v < m; ++v) row[v] = next[v] + src[v];
    }
  }
}

void check_order(std::span<const std::size_t> order, std::size_t k) {
  if (order.size() != k) throw InputError("order must list every net exactly once");
  std::vector<bool> seen(k, false);
  for (std::size_t i : order) {
    if (i >= k || seen[i]) throw InputError("order is not a permutation of the nets");
    seen[i] = true;
  }
}

}  // namespace

const char* to_string(TrainingMode mode) noexcept {
  switch (mode) {
    case TrainingMode::kFull: return "full";
    case TrainingMode::kRankingOnly: return "ranking_only";
    case TrainingMode::kCostOnly: return "cost_only";
  }
  return "unknown";
}

TrainingMode parse_training_mode(const std::string& text) {
  if (text == "full") return TrainingMode::kFull;
  if (text == "ranking_only") return TrainingMode::kRankingOnly;
  if (text == "cost_only") return TrainingMode::kCostOnly;
  throw InputError("unknown training mode '" + text + "'");
}

std::vector<std::size_t> order_from_ranking(std::span<const double> beta) {
  std::vector<std::size_t> order(beta.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return beta[a] > beta[b]; });
  return order;
}

std::vector<CostField> cost_maps_from_params(const CostMapParams& params) {
  if (params.raw.size() != params.nets * params.vertices) {
    throw InputError("cost-map parameter size does not match nets x vertices");
  }
  std::vector<CostField> maps;
  maps.reserve(params.nets);
  for (std::size_t i = 0; i < params.nets; ++i) {
    auto row = params.row(i);
    std::vector<double> values(row.size());
    std::transform(row.begin(), row.end(), values.begin(),
                   [](double v) { return std::max(0.0, v); });
    maps.emplace_back(std::move(values));
  }
  return maps;
}

CostField staged_cost_field(std::span<const CostField> cost_maps,
                            std::span<const std::size_t> order, std::size_t position) {
  check_order(order, cost_maps.size());
  if (position >= order.size()) {
    throw InputError("routing position " + std::to_string(position) + " out of range");
  }
  const std::size_t m = cost_maps.front().size();
  std::vector<double> sum(m, 0.0);
  for (std::size_t q = order.size() - 1; q > position; --q) {
    const CostField& map = cost_maps[order[q]];
    if (map.size() != m) throw InputError("cost maps differ in size");
    for (std::size_t v = 0; v < m; ++v) sum[v] += map[v];
  }
  return CostField(std::move(sum));
}

RoutingOutcome sequential_route(const ProblemInstance& instance,
                                std::span<const std::size_t> order,
                                std::span<const CostField> cost_maps) {
  const std::size_t k = instance.net_count();
  check_order(order, k);
  Scratch& scratch = thread_scratch();
  if (cost_maps.empty() || k == 0) return route_staged(instance, order, {}, scratch);

  if (cost_maps.size() != k) throw InputError("need one cost map per net");
  const std::size_t m = instance.grid().vertex_count();
  for (const auto& map : cost_maps) {
    if (map.size() != m) throw InputError("cost map size does not match the grid");
  }
  build_staged(scratch.staged, order, m, false,
               [&](std::size_t net) { return cost_maps[net].values().data(); });
  return route_staged(instance, order, scratch.staged, scratch);
}

double reward(const RoutingOutcome& outcome, const ProblemInstance& instance,
              const SolverConfig& config) {
  const auto k = static_cast<double>(instance.net_count());
  const auto total = outcome.total_length();
  if (!total) {
    if (!config.shaped_failures) return config.failure_reward;
    const double fraction = k > 0 ? static_cast<double>(outcome.connected_count()) / k : 0.0;
    return -1.0 + 0.5 * fraction;
  }
  const double bound = config.length_upper_bound_factor * k *
                       static_cast<double>(instance.grid().width() + instance.grid().height());
  const double scaled = std::clamp(-static_cast<double>(*total) / bound, -1.0, 0.0);
  return config.shaped_failures ? 0.5 * scaled : scaled;
}

RoutingOutcome post_process(const ProblemInstance& instance, const RoutingOutcome& outcome) {
  if (!validate_outcome(instance, outcome).valid) {
    throw InputError("post-processing needs a valid, fully connected outcome");
  }
  const GridMap& grid = instance.grid();
  const auto& nets = instance.nets();
  RoutingOutcome current = outcome;

  std::vector<std::uint8_t> mask = grid.obstacle_mask();
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] |= instance.pin_mask()[i];
  for (const auto& p : current.paths) mark_path(mask, grid, *p);

  AStarRouter router;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < nets.size(); ++i) {
      Path& path = *current.paths[i];
      for (const Vertex& v : path.vertices) mask[grid.index(v)] = 0;
      auto found = router.route(grid, nets[i], mask, {});
      if (found && found->path.length() < path.length()) {
        path = std::move(found->path);
        changed = true;
      }
      mark_path(mask, grid, path);
    }
  }
  return current;
}

CandidateEvaluator::CandidateEvaluator(const ProblemInstance& instance, TrainingMode mode)
    : instance_(instance), mode_(mode) {}

std::size_t CandidateEvaluator::dimension() const noexcept {
  const std::size_t k = instance_.net_count();
  const std::size_t m = instance_.grid().vertex_count();
  return (trains_ranking() ? k : 0) + (trains_cost() ? k * m : 0);
}

std::vector<std::size_t> CandidateEvaluator::order(std::span<const double> flat) const {
  const std::size_t k = instance_.net_count();
  if (trains_ranking()) return order_from_ranking(flat.first(k));
  std::vector<std::size_t> identity(k);
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  return identity;
}

RoutingOutcome CandidateEvaluator::route(std::span<const double> flat) const {
  if (flat.size() != dimension()) throw InputError("candidate has the wrong dimension");
  const std::size_t k = instance_.net_count();
  const std::size_t m = instance_.grid().vertex_count();
  const auto ord = order(flat);
  Scratch& scratch = thread_scratch();
  if (!trains_cost() || k == 0) return route_staged(instance_, ord, {}, scratch);

  const auto raw = flat.subspan(trains_ranking() ? k : 0, k * m);
  build_staged(scratch.staged, ord, m, true,
               [&](std::size_t net) { return raw.data() + net * m; });
  return route_staged(instance_, ord, scratch.staged, scratch);
}

SolverParams CandidateEvaluator::unpack(std::span<const double> flat) const {
  const std::size_t k = instance_.net_count();
  const std::size_t m = instance_.grid().vertex_count();
  SolverParams params;
  params.ranking.beta.assign(k, 0.0);
  params.cost.nets = k;
  params.cost.vertices = m;
  params.cost.raw.assign(k * m, 0.0);
  std::size_t offset = 0;
  if (trains_ranking()) {
    std::copy_n(flat.begin(), k, params.ranking.beta.begin());
    offset = k;
  }
  if (trains_cost()) std::copy_n(flat.begin() + static_cast<long>(offset), k * m, params.cost.raw.begin());
  return params;
}

SolveResult solve(const ProblemInstance& instance, const SolverConfig& config,
                  const GenerationCallback& callback) {
  CandidateEvaluator evaluator(instance, config.mode);
  const std::size_t k = instance.net_count();
  const std::size_t m = instance.grid().vertex_count();

  ESConfig es = config.es;
  es.noise_scales.clear();
  if (evaluator.trains_ranking()) es.noise_scales.push_back({k, config.sigma_ranking});
  if (evaluator.trains_cost()) es.noise_scales.push_back({k * m, config.sigma_cost});

  const std::vector<double> initial(evaluator.dimension(), 0.0);
  auto objective = [&](std::span<const double> flat) {
    return reward(evaluator.route(flat), instance, config);
  };
  OptimizeResult trained = optimize(initial, objective, es, callback);

  SolveResult result;
  result.raw_outcome = evaluator.route(trained.best_theta);
  result.order = evaluator.order(trained.best_theta);
  result.params = evaluator.unpack(trained.best_theta);
  result.best_reward = trained.best_reward;
  result.best_generation = trained.best_generation;
  result.history = std::move(trained.history);
  result.outcome = (config.post_process && result.raw_outcome.fully_connected())
                       ? post_process(instance, result.raw_outcome)
                       : result.raw_outcome;
  return result;
}

}  // namespace rcroute
