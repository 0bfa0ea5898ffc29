#pragma once

// Subcommand implementations behind the `rcroute` executable. Each returns
// the process exit code: 0 iff the requested artifact was fully produced.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace rcroute {

struct GenerateCommand {
  int width = 16;
  int height = 16;
  int nets = 4;
  double density = 0.0;
  int count = 50;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir = ".";
};

/// Training knobs shared by `solve` and `bench`; defaults are the reference
/// hyperparameters (1000 generations, lr 0.001, 40 evaluators, sigma 0.1).
struct TrainingFlags {
  std::size_t generations = 1000;
  std::size_t population = 40;
  double learning_rate = 0.001;
  double sigma_ranking = 0.1;
  double sigma_cost = 0.1;
  double length_factor = 1.0;
  bool shaped_failures = false;
  bool mirrored = false;
  std::size_t threads = 0;
};

struct SolveCommand {
  std::filesystem::path instance;
  std::string mode = "full";
  TrainingFlags training;
  bool post_process = false;
  std::uint64_t seed = 0;
  std::filesystem::path out = "solution.json";
  std::optional<std::filesystem::path> log;
  bool log_timing = false;
};

struct BenchCommand {
  std::filesystem::path instance_dir;
  std::string algorithms = "seq-astar:5,seq-astar:200,cml,rc,rc-pp";
  std::string seeds = "0,1,2,3,4,5";
  TrainingFlags training;
  std::filesystem::path out_dir = "bench_out";
  /// Regenerate the table from stored records instead of running.
  std::optional<std::filesystem::path> records_in;
};

struct RenderCommand {
  std::filesystem::path instance;
  std::optional<std::filesystem::path> solution;
  std::string format = "ascii";
  std::optional<std::filesystem::path> out;  // stdout when absent
};

int cmd_generate(const GenerateCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_solve(const SolveCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_render(const RenderCommand& cmd, std::ostream& out, std::ostream& err);

/// File name used by `generate`, e.g. "16x16_plain_007.json".
std::string generated_instance_name(int width, int height, bool obstacles, int index);

}  // namespace rcroute
