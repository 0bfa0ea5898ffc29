#include "rcroute/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rcroute/parallel.hpp"
#include "rcroute/random.hpp"

namespace rcroute {
namespace {

using Clock = std::chrono::steady_clock;

std::size_t factorial_capped(std::size_t k, std::size_t cap) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) {
    if (f > cap / i) return cap;
    f *= i;
  }
  return std::min(f, cap);
}

bool better(const RoutingOutcome& a, const RoutingOutcome& b) {
  const auto ca = a.connected_count();
  const auto cb = b.connected_count();
  if (ca != cb) return ca > cb;
  const auto la = a.total_length();
  const auto lb = b.total_length();
  return la && lb && *la < *lb;
}

MeanStd mean_std(const std::vector<double>& xs) {
  MeanStd out;
  if (xs.empty()) return out;
  out.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - out.mean) * (x - out.mean);
  out.std = std::sqrt(var / static_cast<double>(xs.size()));
  return out;
}

template <typename T>
void push_unique(std::vector<T>& v, const T& x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

AlgoResult make_record(const AlgorithmSpec& algo, const NamedInstance& inst, std::uint64_t seed,
                       const RoutingOutcome& outcome, double seconds) {
  AlgoResult r;
  r.algorithm = algo.id;
  r.instance = inst.name;
  r.group = inst.group;
  r.seed = seed;
  r.success = outcome.fully_connected();
  r.connected = outcome.connected_count();
  r.length = outcome.total_length();
  r.wallclock_seconds = seconds;
  return r;
}

}  // namespace

std::vector<std::vector<std::size_t>> sample_distinct_orders(std::size_t net_count,
                                                             std::size_t num_orders,
                                                             std::uint64_t seed) {
  const std::size_t target = factorial_capped(net_count, num_orders);
  Rng rng(derive_seed({seed, 0x0bde75ULL}));
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> orders;
  while (orders.size() < target) {
    std::vector<std::size_t> order(net_count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    portable_shuffle(order, rng);
    if (seen.insert(order).second) orders.push_back(std::move(order));
  }
  return orders;
}

BaselineResult seq_astar_baseline(const ProblemInstance& instance, std::size_t num_orders,
                                  std::uint64_t seed) {
  if (num_orders == 0) throw InputError("seq-astar needs at least one order");
  BaselineResult best;
  const auto orders = sample_distinct_orders(instance.net_count(), num_orders, seed);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    RoutingOutcome outcome = sequential_route(instance, orders[i], {});
    if (i == 0 || better(outcome, best.outcome)) {
      best.outcome = std::move(outcome);
      best.order = orders[i];
    }
  }
  best.orders_tried = orders.size();
  return best;
}

std::string AlgorithmSpec::display_name() const {
  if (kind == AlgorithmKind::kSeqAStar) return "Seq A*(" + std::to_string(num_orders) + ")";
  switch (mode) {
    case TrainingMode::kCostOnly: return post_process ? "Cost Learning II" : "Cost Learning";
    case TrainingMode::kRankingOnly:
      return post_process ? "Ranking Learning II" : "Ranking Learning";
    case TrainingMode::kFull: return post_process ? "Ranking Cost II" : "Ranking Cost I";
  }
  return id;
}

AlgorithmSpec parse_algorithm(std::string_view text) {
  AlgorithmSpec spec;
  spec.id = std::string(text);
  constexpr std::string_view kSeq = "seq-astar:";
  if (text.starts_with(kSeq)) {
    const std::string digits(text.substr(kSeq.size()));
    std::size_t used = 0;
    unsigned long n = 0;
    try {
      n = std::stoul(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (digits.empty() || used != digits.size() || n == 0) {
      throw InputError("bad order count in '" + spec.id + "'");
    }
    spec.kind = AlgorithmKind::kSeqAStar;
    spec.num_orders = n;
    return spec;
  }
  spec.kind = AlgorithmKind::kRankingCost;
  if (text == "rc") {
    spec.mode = TrainingMode::kFull;
  } else if (text == "rc-pp") {
    spec.mode = TrainingMode::kFull;
    spec.post_process = true;
  } else if (text == "cml") {
    spec.mode = TrainingMode::kCostOnly;
  } else if (text == "rl") {
    spec.mode = TrainingMode::kRankingOnly;
  } else {
    throw InputError("unknown algorithm '" + spec.id + "'");
  }
  return spec;
}

std::vector<AlgorithmSpec> parse_algorithm_list(std::string_view comma_separated) {
  std::vector<AlgorithmSpec> out;
  std::size_t pos = 0;
  while (pos <= comma_separated.size()) {
    const std::size_t comma = comma_separated.find(',', pos);
    const auto item = comma_separated.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (!item.empty()) out.push_back(parse_algorithm(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw InputError("no algorithms given");
  return out;
}

double success_rate(std::span<const AlgoResult> results) {
  if (results.empty()) throw InputError("success rate of an empty result set");
  const auto wins = std::count_if(results.begin(), results.end(),
                                  [](const AlgoResult& r) { return r.success; });
  return static_cast<double>(wins) / static_cast<double>(results.size());
}

CommonLengths common_average_length(const std::map<std::string, std::vector<AlgoResult>>& results) {
  std::set<std::string> all;
  std::set<std::string> failed;
  for (const auto& [algo, records] : results) {
    for (const auto& r : records) {
      all.insert(r.instance);
      if (!r.success) failed.insert(r.instance);
    }
  }
  // An instance an algorithm never ran on cannot be common.
  for (const auto& [algo, records] : results) {
    std::set<std::string> ran;
    for (const auto& r : records) ran.insert(r.instance);
    for (const auto& name : all) {
      if (!ran.contains(name)) failed.insert(name);
    }
  }
  CommonLengths out;
  for (const auto& name : all) {
    if (!failed.contains(name)) out.common_instances.push_back(name);
  }
  if (out.common_instances.empty()) return out;
  const std::set<std::string> common(out.common_instances.begin(), out.common_instances.end());
  for (const auto& [algo, records] : results) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& r : records) {
      if (common.contains(r.instance)) {
        sum += static_cast<double>(*r.length);
        ++n;
      }
    }
    out.average[algo] = sum / static_cast<double>(n);
  }
  return out;
}

std::string instance_group(const ProblemInstance& instance) {
  const auto& g = instance.grid();
  return std::to_string(g.width()) + "x" + std::to_string(g.height()) + " (" +
         std::to_string(instance.net_count()) + " pairs) " +
         (g.obstacle_count() == 0 ? "no obstacle" : "with obstacles");
}

BenchReport run_benchmark(std::span<const NamedInstance> instances,
                          std::span<const AlgorithmSpec> algorithms,
                          std::span<const std::uint64_t> seeds, const BenchOptions& options) {
  // Learning algorithms that differ only in post-processing share one training run.
  struct Cell {
    std::size_t instance;
    std::size_t seed;
    std::vector<std::size_t> algos;
  };
  std::vector<Cell> cells;
  std::vector<std::vector<std::size_t>> batches;
  std::vector<bool> batched(algorithms.size(), false);
  for (std::size_t a = 0; a < algorithms.size(); ++a) {
    if (batched[a]) continue;
    std::vector<std::size_t> batch{a};
    batched[a] = true;
    if (algorithms[a].kind == AlgorithmKind::kRankingCost) {
      for (std::size_t b = a + 1; b < algorithms.size(); ++b) {
        if (!batched[b] && algorithms[b].kind == AlgorithmKind::kRankingCost &&
            algorithms[b].mode == algorithms[a].mode) {
          batch.push_back(b);
          batched[b] = true;
        }
      }
    }
    batches.push_back(std::move(batch));
  }
  for (const auto& batch : batches) {
    for (std::size_t i = 0; i < instances.size(); ++i) {
      for (std::size_t s = 0; s < seeds.size(); ++s) cells.push_back({i, s, batch});
    }
  }

  const std::size_t threads = resolve_thread_count(options.threads);
  std::vector<std::vector<AlgoResult>> produced(cells.size());
  parallel_for(cells.size(), threads, [&](std::size_t c) {
    const Cell& cell = cells[c];
    const NamedInstance& inst = instances[cell.instance];
    const std::uint64_t seed = seeds[cell.seed];
    auto& out = produced[c];
    const AlgorithmSpec& lead = algorithms[cell.algos.front()];
    try {
      const auto started = Clock::now();
      if (lead.kind == AlgorithmKind::kSeqAStar) {
        auto best = seq_astar_baseline(inst.instance, lead.num_orders, seed);
        const double secs = std::chrono::duration<double>(Clock::now() - started).count();
        out.push_back(make_record(lead, inst, seed, best.outcome, secs));
        return;
      }
      SolverConfig cfg = options.solver;
      cfg.mode = lead.mode;
      cfg.post_process = false;
      cfg.es.seed = seed;
      if (threads > 1) cfg.es.threads = 1;
      const SolveResult solved = solve(inst.instance, cfg);
      const double train_secs = std::chrono::duration<double>(Clock::now() - started).count();
      for (std::size_t a : cell.algos) {
        const AlgorithmSpec& algo = algorithms[a];
        if (algo.post_process && solved.raw_outcome.fully_connected()) {
          const auto pp_started = Clock::now();
          RoutingOutcome improved = post_process(inst.instance, solved.raw_outcome);
          const double pp_secs = std::chrono::duration<double>(Clock::now() - pp_started).count();
          out.push_back(make_record(algo, inst, seed, improved, train_secs + pp_secs));
        } else {
          out.push_back(make_record(algo, inst, seed, solved.raw_outcome, train_secs));
        }
      }
    } catch (const std::exception& e) {
      out.clear();
      for (std::size_t a : cell.algos) {
        AlgoResult r;
        r.algorithm = algorithms[a].id;
        r.instance = inst.name;
        r.group = inst.group;
        r.seed = seed;
        r.error = e.what();
        out.push_back(std::move(r));
      }
    }
  });

  // Records ordered by (algorithm, instance, seed) as requested.
  std::vector<AlgoResult> records;
  for (std::size_t a = 0; a < algorithms.size(); ++a) {
    for (std::size_t i = 0; i < instances.size(); ++i) {
      for (std::size_t s = 0; s < seeds.size(); ++s) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (cells[c].instance != i || cells[c].seed != s) continue;
          for (const auto& r : produced[c]) {
            if (r.algorithm == algorithms[a].id) records.push_back(r);
          }
        }
      }
    }
  }
  BenchReport report = summarize(std::move(records));
  // Keep the requested order even for algorithms with no records.
  report.algorithms.clear();
  for (const auto& a : algorithms) push_unique(report.algorithms, a.id);
  return report;
}

BenchReport summarize(std::vector<AlgoResult> records) {
  BenchReport report;
  std::vector<std::string> groups;
  for (const auto& r : records) {
    push_unique(report.algorithms, r.algorithm);
    push_unique(report.seeds, r.seed);
    push_unique(groups, r.group);
  }
  for (const auto& group : groups) {
    GroupSummary gs;
    gs.group = group;
    std::map<std::string, std::vector<AlgoResult>> by_algo;
    std::set<std::string> names;
    for (const auto& r : records) {
      if (r.group != group) continue;
      by_algo[r.algorithm].push_back(r);
      names.insert(r.instance);
    }
    gs.instances = names.size();
    const CommonLengths common = common_average_length(by_algo);
    gs.common_instances = common.common_instances.size();
    const std::set<std::string> common_set(common.common_instances.begin(),
                                           common.common_instances.end());

    for (const auto& [algo, recs] : by_algo) {
      CellSummary cell;
      std::vector<double> rates;
      std::vector<double> lengths;
      double clock = 0.0;
      for (std::uint64_t seed : report.seeds) {
        std::vector<AlgoResult> per_seed;
        double len_sum = 0.0;
        std::size_t len_n = 0;
        for (const auto& r : recs) {
          if (r.seed != seed) continue;
          per_seed.push_back(r);
          if (common_set.contains(r.instance)) {
            len_sum += static_cast<double>(*r.length);
            ++len_n;
          }
        }
        if (per_seed.empty()) continue;
        rates.push_back(success_rate(per_seed));
        if (len_n > 0) lengths.push_back(len_sum / static_cast<double>(len_n));
      }
      for (const auto& r : recs) clock += r.wallclock_seconds;
      cell.success_rate = mean_std(rates);
      if (!lengths.empty()) cell.common_length = mean_std(lengths);
      cell.mean_wallclock = recs.empty() ? 0.0 : clock / static_cast<double>(recs.size());
      gs.cells[algo] = cell;
    }
    report.groups.push_back(std::move(gs));
  }
  report.records = std::move(records);
  return report;
}

std::string format_records(std::span<const AlgoResult> records) {
  std::string out;
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["algorithm"] = r.algorithm;
    j["instance"] = r.instance;
    j["group"] = r.group;
    j["seed"] = r.seed;
    j["success"] = r.success;
    j["connected"] = r.connected;
    j["length"] = r.length ? nlohmann::ordered_json(*r.length) : nlohmann::ordered_json(nullptr);
    j["wallclock"] = r.wallclock_seconds;
    if (!r.error.empty()) j["error"] = r.error;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<AlgoResult> parse_records(std::string_view text) {
  std::vector<AlgoResult> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      AlgoResult r;
      r.algorithm = j.at("algorithm").get<std::string>();
      r.instance = j.at("instance").get<std::string>();
      r.group = j.at("group").get<std::string>();
      r.seed = j.at("seed").get<std::uint64_t>();
      r.success = j.at("success").get<bool>();
      r.connected = j.at("connected").get<std::size_t>();
      if (!j.at("length").is_null()) r.length = j.at("length").get<std::int64_t>();
      r.wallclock_seconds = j.at("wallclock").get<double>();
      if (j.contains("error")) r.error = j.at("error").get<std::string>();
      out.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw InputError("record line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::string format_table(const BenchReport& report) {
  std::map<std::string, std::string> names;
  for (const auto& id : report.algorithms) {
    try {
      names[id] = parse_algorithm(id).display_name();
    } catch (const InputError&) {
      names[id] = id;
    }
  }
  auto fixed = [](double v, int digits) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
  };

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""};
  for (const auto& g : report.groups) header.push_back(g.group);
  rows.push_back(header);
  for (const auto& id : report.algorithms) {
    std::vector<std::string> row{names[id]};
    for (const auto& g : report.groups) {
      auto it = g.cells.find(id);
      if (it == g.cells.end()) {
        row.push_back("n/a");
        continue;
      }
      const CellSummary& c = it->second;
      std::string cell = fixed(c.success_rate.mean, 2) + "±" + fixed(c.success_rate.std, 2) + "(";
      cell += c.common_length ? fixed(c.common_length->mean, 1) + "±" + fixed(c.common_length->std, 2)
                              : std::string("-");
      cell += ")";
      row.push_back(cell);
    }
    rows.push_back(row);
  }

  // Width in code points so "±" counts as one column.
  auto width = [](const std::string& s) {
    return static_cast<std::size_t>(std::count_if(
        s.begin(), s.end(), [](char ch) { return (static_cast<unsigned char>(ch) & 0xC0) != 0x80; }));
  };
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], width(row[c]));
  }
  std::ostringstream out;
  out << "success rate ± std (common average length ± std) over " << report.seeds.size()
      << " seed(s)\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      out << (c == 0 ? "" : " | ") << rows[r][c]
          << std::string(widths[c] - width(rows[r][c]), ' ');
    }
    out << '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t w : widths) total += w + 3;
      out << std::string(total - 3, '-') << '\n';
    }
  }
  out << "\ninstances / common successful instances per group:\n";
  for (const auto& g : report.groups) {
    out << "  " << g.group << ": " << g.instances << " / " << g.common_instances << '\n';
  }
  out << "\nmean wallclock per map (seconds):\n";
  for (const auto& id : report.algorithms) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& r : report.records) {
      if (r.algorithm == id) {
        sum += r.wallclock_seconds;
        ++n;
      }
    }
    out << "  " << names[id] << ": " << (n ? fixed(sum / static_cast<double>(n), 3) : "-") << '\n';
  }
  return out.str();
}

}  // namespace rcroute
