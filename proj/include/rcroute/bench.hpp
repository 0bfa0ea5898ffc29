#pragma once

// Baselines, metrics and the benchmark sweep: every (algorithm, instance,
// seed) cell is solved independently, then success rates and the common
// average length are aggregated across seeds per instance group.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rcroute/grid.hpp"
#include "rcroute/ranking_cost.hpp"

namespace rcroute {

struct BaselineResult {
  RoutingOutcome outcome;
  std::vector<std::size_t> order;
  std::size_t orders_tried = 0;
};

/// The first min(num_orders, k!) distinct permutations drawn from a stream
/// seeded by `seed`. A larger num_orders extends the same prefix.
std::vector<std::vector<std::size_t>> sample_distinct_orders(std::size_t net_count,
                                                             std::size_t num_orders,
                                                             std::uint64_t seed);

/// Sequential A* with zero cost maps over sampled orders. Keeps the outcome
/// with the most connected nets, then the smaller total length, then the
/// earliest order.
BaselineResult seq_astar_baseline(const ProblemInstance& instance, std::size_t num_orders,
                                  std::uint64_t seed);

enum class AlgorithmKind { kSeqAStar, kRankingCost };

struct AlgorithmSpec {
  std::string id;  // as given on the command line, e.g. "seq-astar:5"
  AlgorithmKind kind = AlgorithmKind::kSeqAStar;
  std::size_t num_orders = 5;
  TrainingMode mode = TrainingMode::kFull;
  bool post_process = false;

  std::string display_name() const;
};

/// Parses "seq-astar:N", "rl" (ranking only), "cml" (cost only), "rc", "rc-pp".
AlgorithmSpec parse_algorithm(std::string_view text);
std::vector<AlgorithmSpec> parse_algorithm_list(std::string_view comma_separated);

struct AlgoResult {
  std::string algorithm;
  std::string instance;
  std::string group;
  std::uint64_t seed = 0;
  bool success = false;
  std::size_t connected = 0;
  std::optional<std::int64_t> length;
  double wallclock_seconds = 0.0;
  std::string error;  // non-empty when the run threw
};

/// Fraction of successful records. Throws InputError on empty input.
double success_rate(std::span<const AlgoResult> results);

struct CommonLengths {
  /// Instances solved by every algorithm in every record given.
  std::vector<std::string> common_instances;
  /// Mean length over common_instances, per algorithm; empty when there are none.
  std::map<std::string, double> average;

  bool has_common() const noexcept { return !common_instances.empty(); }
};

CommonLengths common_average_length(const std::map<std::string, std::vector<AlgoResult>>& results);

struct NamedInstance {
  std::string name;
  std::string group;
  ProblemInstance instance;
};

/// Group label such as "16x16 (4 pairs) no obstacle".
std::string instance_group(const ProblemInstance& instance);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

struct CellSummary {
  MeanStd success_rate;
  std::optional<MeanStd> common_length;  // absent when no common instances
  double mean_wallclock = 0.0;
};

struct GroupSummary {
  std::string group;
  std::size_t instances = 0;
  std::size_t common_instances = 0;
  std::map<std::string, CellSummary> cells;  // by algorithm id
};

struct BenchReport {
  std::vector<std::string> algorithms;  // ids, in requested order
  std::vector<std::uint64_t> seeds;
  std::vector<GroupSummary> groups;
  std::vector<AlgoResult> records;
};

struct BenchOptions {
  SolverConfig solver;      // template for learning algorithms; seed comes from the sweep
  std::size_t threads = 0;  // cell-level workers; 0 = default
};

BenchReport run_benchmark(std::span<const NamedInstance> instances,
                          std::span<const AlgorithmSpec> algorithms,
                          std::span<const std::uint64_t> seeds, const BenchOptions& options);

/// Rebuilds the aggregate report from stored records alone.
BenchReport summarize(std::vector<AlgoResult> records);

std::string format_records(std::span<const AlgoResult> records);
std::vector<AlgoResult> parse_records(std::string_view text);
/// Plain-text table with "rate±std(length±std)" cells plus a timing block.
std::string format_table(const BenchReport& report);

}  // namespace rcroute
