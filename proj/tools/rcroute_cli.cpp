#include <iostream>

#include <CLI11.hpp>

#include "rcroute/commands.hpp"

namespace {

void add_training_flags(CLI::App* app, rcroute::TrainingFlags& t) {
  app->add_option("--generations", t.generations, "ES generations")->capture_default_str();
  app->add_option("--population", t.population, "evaluators per generation")->capture_default_str();
  app->add_option("--lr", t.learning_rate, "learning rate")->capture_default_str();
  app->add_option("--sigma-r", t.sigma_ranking, "ranking noise scale")->capture_default_str();
  app->add_option("--sigma-c", t.sigma_cost, "cost-map noise scale")->capture_default_str();
  app->add_option("--length-factor", t.length_factor, "reward length bound factor")
      ->capture_default_str();
  app->add_flag("--shaped-failures", t.shaped_failures, "grade failed routings by connected nets");
  app->add_flag("--mirrored", t.mirrored, "antithetic noise pairs");
  app->add_option("--threads", t.threads, "worker threads (0 = $RCROUTE_THREADS or all cores)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rcroute: grid circuit routing with learned net ordering and cost maps"};
  app.require_subcommand(1);

  rcroute::GenerateCommand gen;
  auto* g = app.add_subcommand("generate", "write random routing instances");
  g->add_option("--width", gen.width)->capture_default_str();
  g->add_option("--height", gen.height)->capture_default_str();
  g->add_option("--nets", gen.nets)->capture_default_str();
  g->add_option("--density", gen.density, "obstacle density in [0,1)")->capture_default_str();
  g->add_option("--count", gen.count)->capture_default_str();
  g->add_option("--seed", gen.seed)->capture_default_str();
  g->add_option("--out-dir", gen.out_dir)->capture_default_str();

  rcroute::SolveCommand solve;
  auto* s = app.add_subcommand("solve", "train and route one instance");
  s->add_option("instance", solve.instance, "instance file")->required();
  s->add_option("--mode", solve.mode, "full | ranking_only | cost_only")->capture_default_str();
  add_training_flags(s, solve.training);
  s->add_flag("--post-process", solve.post_process, "shorten paths after training");
  s->add_option("--seed", solve.seed)->capture_default_str();
  s->add_option("--out", solve.out, "solution file")->capture_default_str();
  s->add_option("--log", solve.log, "per-generation training log (JSON lines)");
  s->add_flag("--log-timing", solve.log_timing, "include wallclock in the training log");

  rcroute::BenchCommand bench;
  auto* b = app.add_subcommand("bench", "run algorithms over an instance directory");
  b->add_option("instance_dir", bench.instance_dir, "directory of instance files");
  b->add_option("--algorithms", bench.algorithms)->capture_default_str();
  b->add_option("--seeds", bench.seeds)->capture_default_str();
  add_training_flags(b, bench.training);
  b->add_option("--out-dir", bench.out_dir)->capture_default_str();
  b->add_option("--records-in", bench.records_in, "rebuild the table from stored records");

  rcroute::RenderCommand render;
  auto* r = app.add_subcommand("render", "draw an instance and optional solution");
  r->add_option("instance", render.instance)->required();
  r->add_option("--solution", render.solution);
  r->add_option("--format", render.format, "ascii | svg")->capture_default_str();
  r->add_option("--out", render.out);

  CLI11_PARSE(app, argc, argv);

  if (g->parsed()) return rcroute::cmd_generate(gen, std::cout, std::cerr);
  if (s->parsed()) return rcroute::cmd_solve(solve, std::cout, std::cerr);
  if (b->parsed()) {
    if (bench.instance_dir.empty() && !bench.records_in) {
      std::cerr << "bench: need an instance directory or --records-in\n";
      return 1;
    }
    return rcroute::cmd_bench(bench, std::cout, std::cerr);
  }
  return rcroute::cmd_render(render, std::cout, std::cerr);
}
