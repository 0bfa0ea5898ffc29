#include "rcroute/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "rcroute/bench.hpp"
#include "rcroute/instance_io.hpp"
#include "rcroute/random.hpp"
#include "rcroute/ranking_cost.hpp"
#include "rcroute/render.hpp"
#include "rcroute/solution_io.hpp"

namespace rcroute {
namespace {

SolverConfig solver_config(const TrainingFlags& flags) {
  SolverConfig cfg;
  cfg.es.max_generations = flags.generations;
  cfg.es.population_size = flags.population;
  cfg.es.learning_rate = flags.learning_rate;
  cfg.es.mirrored = flags.mirrored;
  cfg.es.threads = flags.threads;
  cfg.sigma_ranking = flags.sigma_ranking;
  cfg.sigma_cost = flags.sigma_cost;
  cfg.length_upper_bound_factor = flags.length_factor;
  cfg.shaped_failures = flags.shaped_failures;
  return cfg;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const auto v = std::stoull(item, &used);
    if (used != item.size()) throw InputError("bad seed '" + item + "'");
    seeds.push_back(v);
  }
  if (seeds.empty()) throw InputError("no seeds given");
  return seeds;
}

}  // namespace

std::string generated_instance_name(int width, int height, bool obstacles, int index) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%dx%d_%s_%03d.json", width, height,
                obstacles ? "obstacles" : "plain", index);
  return buf;
}

int cmd_generate(const GenerateCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    if (cmd.count < 0) throw InputError("count must be non-negative");
    if (cmd.count > 0) std::filesystem::create_directories(cmd.out_dir);
    for (int i = 0; i < cmd.count; ++i) {
      const auto inst = generate_instance(cmd.width, cmd.height, cmd.nets, cmd.density,
                                          derive_seed({cmd.seed, static_cast<std::uint64_t>(i)}));
      const auto path =
          cmd.out_dir / generated_instance_name(cmd.width, cmd.height, cmd.density > 0.0, i);
      save_instance_file(inst, path);
    }
    out << "wrote " << cmd.count << " instance(s) to " << cmd.out_dir.string() << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "generate: " << e.what() << '\n';
    return 1;
  }
}

int cmd_solve(const SolveCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    const ProblemInstance instance = load_instance_file(cmd.instance);
    SolverConfig cfg = solver_config(cmd.training);
    cfg.mode = parse_training_mode(cmd.mode);
    cfg.post_process = cmd.post_process;
    cfg.es.seed = cmd.seed;

    const SolveResult result = solve(instance, cfg);
    write_text_file(cmd.out, save_solution({result.outcome, result.order}));
    if (cmd.log) write_text_file(*cmd.log, format_training_log(result.history, cmd.log_timing));

    out << "connected " << result.outcome.connected_count() << "/" << instance.net_count()
        << " nets";
    if (auto total = result.outcome.total_length()) {
      out << ", total length " << *total;
      if (cmd.post_process) out << " (before post-processing " << *result.raw_outcome.total_length() << ")";
    }
    out << ", generations " << result.history.size() << ", best reward " << result.best_reward
        << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "solve: " << e.what() << '\n';
    return 1;
  }
}

int cmd_bench(const BenchCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    BenchReport report;
    if (cmd.records_in) {
      report = summarize(parse_records(read_text_file(*cmd.records_in)));
    } else {
      std::vector<std::filesystem::path> files;
      for (const auto& entry : std::filesystem::directory_iterator(cmd.instance_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
          files.push_back(entry.path());
        }
      }
      std::sort(files.begin(), files.end());
      if (files.empty()) throw InputError("no instance files in " + cmd.instance_dir.string());
      std::vector<NamedInstance> instances;
      for (const auto& f : files) {
        auto inst = load_instance_file(f);
        auto group = instance_group(inst);
        instances.push_back({f.filename().string(), std::move(group), std::move(inst)});
      }
      const auto algorithms = parse_algorithm_list(cmd.algorithms);
      const auto seeds = parse_seeds(cmd.seeds);
      BenchOptions options;
      options.solver = solver_config(cmd.training);
      options.threads = cmd.training.threads;
      report = run_benchmark(instances, algorithms, seeds, options);
    }
    std::filesystem::create_directories(cmd.out_dir);
    const std::string table = format_table(report);
    if (!cmd.records_in) write_text_file(cmd.out_dir / "records.jsonl", format_records(report.records));
    write_text_file(cmd.out_dir / "table.txt", table);
    std::size_t failures = 0;
    for (const auto& r : report.records) {
      if (!r.error.empty()) {
        ++failures;
        err << "bench: " << r.algorithm << " on " << r.instance << " seed " << r.seed << ": "
            << r.error << '\n';
      }
    }
    out << table;
    if (failures) out << failures << " run(s) raised errors; see records\n";
    return 0;
  } catch (const std::exception& e) {
    err << "bench: " << e.what() << '\n';
    return 1;
  }
}

int cmd_render(const RenderCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    const ProblemInstance instance = load_instance_file(cmd.instance);
    std::optional<RoutingOutcome> outcome;
    if (cmd.solution) outcome = load_solution(read_text_file(*cmd.solution)).outcome;
    std::string text;
    if (cmd.format == "ascii") {
      text = render_ascii(instance, outcome);
    } else if (cmd.format == "svg") {
      text = render_svg(instance, outcome);
    } else {
      throw InputError("unknown format '" + cmd.format + "'");
    }
    if (cmd.out) {
      write_text_file(*cmd.out, text);
    } else {
      out << text;
    }
    return 0;
  } catch (const std::exception& e) {
    err << "render: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace rcroute
