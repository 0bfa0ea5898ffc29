#pragma once

// OpenAI-style evolution strategies: Gaussian perturbations of a flat
// parameter vector, per-generation reward standardization, and the
// score-function ascent step.

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcroute {

/// A contiguous slice of the parameter vector sharing one noise scale.
struct NoiseSegment {
  std::size_t length = 0;
  double sigma = 0.1;
};

struct ESConfig {
  std::size_t population_size = 40;
  double learning_rate = 0.001;
  std::vector<NoiseSegment> noise_scales;
  std::size_t max_generations = 1000;
  std::uint64_t seed = 0;
  /// Pair evaluators (2i, 2i+1) with noise (e, -e). Requires an even population.
  bool mirrored = false;
  /// 0 selects resolve_thread_count()'s default.
  std::size_t threads = 0;

  std::size_t dimension() const noexcept;
  /// Throws InputError on an empty population, non-positive rates or sigmas,
  /// or an odd population with mirrored sampling.
  void validate() const;
};

struct Generation {
  std::vector<std::vector<double>> noises;
  std::vector<double> rewards;
  std::vector<double> normalized_rewards;
};

struct GenerationStats {
  std::size_t generation = 0;
  double best_reward = 0.0;
  double mean_reward = 0.0;
  double min_reward = 0.0;
  double wallclock_seconds = 0.0;
};

struct OptimizeResult {
  std::vector<double> theta;       // final mean parameter
  std::vector<double> best_theta;  // best candidate ever evaluated
  double best_reward = 0.0;
  /// Generation that produced best_theta; -1 means the initial parameter.
  long best_generation = -1;
  std::vector<GenerationStats> history;
};

/// Raised when the objective throws; carries where it happened.
class ObjectiveError : public std::runtime_error {
 public:
  ObjectiveError(std::size_t generation, std::size_t evaluator, const std::string& what)
      : std::runtime_error("objective failed at generation " + std::to_string(generation) +
                           ", evaluator " + std::to_string(evaluator) + ": " + what),
        generation_(generation),
        evaluator_(evaluator) {}
  std::size_t generation() const noexcept { return generation_; }
  std::size_t evaluator() const noexcept { return evaluator_; }

 private:
  std::size_t generation_;
  std::size_t evaluator_;
};

/// Standard-normal vector; a pure function of (seed, generation, index, dim).
std::vector<double> sample_noise(std::size_t dim, std::uint64_t seed, std::uint64_t generation,
                                 std::uint64_t index);

/// Noise for a whole population, honoring config.mirrored.
std::vector<std::vector<double>> sample_population_noise(const ESConfig& config,
                                                         std::uint64_t generation);

/// theta + sigma_s * noise, segment by segment.
std::vector<double> perturb(std::span<const double> theta, std::span<const double> noise,
                            const ESConfig& config);
void perturb_into(std::span<const double> theta, std::span<const double> noise,
                  const ESConfig& config, std::span<double> out);

/// (r - mean) / std with the population standard deviation; all zeros when
/// std is 0. Throws InputError for fewer than two rewards.
std::vector<double> normalize_rewards(std::span<const double> rewards);

/// theta_s + lr / (n * sigma_s) * sum_j rbar_j * eps_{j,s}, summed in
/// evaluator order.
std::vector<double> update(std::span<const double> theta, const Generation& generation,
                           const ESConfig& config);

using Objective = std::function<double(std::span<const double>)>;
using GenerationCallback = std::function<void(const GenerationStats&)>;

/// Runs config.max_generations of sample -> evaluate -> normalize -> update.
/// The objective must be pure and safe to call concurrently. The initial
/// parameter is evaluated once and competes for best_theta; later candidates
/// replace it only with a strictly larger reward, so ties keep the earliest.
OptimizeResult optimize(std::span<const double> initial_theta, const Objective& objective,
                        const ESConfig& config, const GenerationCallback& callback = {});

}  // namespace rcroute
