#include "rcroute/es.hpp"

#include <chrono>
#include <cmath>
#include <exception>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>

#include "rcroute/grid.hpp"
#include "rcroute/parallel.hpp"
#include "rcroute/random.hpp"

namespace rcroute {
namespace {

void fill_noise(std::span<double> out, std::uint64_t seed, std::uint64_t generation,
                std::uint64_t index) {
  // Same stream as Rng, generated noticeably faster.
  boost::random::mt19937_64 rng(derive_seed({seed, generation, index}));
  boost::random::normal_distribution<double> normal(0.0, 1.0);
  for (double& x : out) x = normal(rng);
}

void fill_population_noise(std::span<double> out, const ESConfig& config,
                           std::uint64_t generation, std::size_t index) {
  if (config.mirrored) {
    fill_noise(out, config.seed, generation, index / 2);
    if (index % 2 == 1) {
      for (double& x : out) x = -x;
    }
  } else {
    fill_noise(out, config.seed, generation, index);
  }
}

void check_dimension(std::size_t got, const ESConfig& config, const char* what) {
  if (got != config.dimension()) {
    throw InputError(std::string(what) + " has dimension " + std::to_string(got) +
                     ", config segments cover " + std::to_string(config.dimension()));
  }
}

}  // namespace

std::size_t ESConfig::dimension() const noexcept {
  std::size_t d = 0;
  for (const auto& s : noise_scales) d += s.length;
  return d;
}

void ESConfig::validate() const {
  if (population_size == 0) throw InputError("population size must be positive");
  if (!(learning_rate > 0.0)) throw InputError("learning rate must be positive");
  for (const auto& s : noise_scales) {
    if (!(s.sigma > 0.0)) throw InputError("noise scales must be positive");
  }
  if (mirrored && population_size % 2 != 0) {
    throw InputError("mirrored sampling needs an even population size");
  }
}

std::vector<double> sample_noise(std::size_t dim, std::uint64_t seed, std::uint64_t generation,
                                 std::uint64_t index) {
  std::vector<double> out(dim);
  fill_noise(out, seed, generation, index);
  return out;
}

std::vector<std::vector<double>> sample_population_noise(const ESConfig& config,
                                                         std::uint64_t generation) {
  std::vector<std::vector<double>> out(config.population_size,
                                       std::vector<double>(config.dimension()));
  for (std::size_t i = 0; i < out.size(); ++i) fill_population_noise(out[i], config, generation, i);
  return out;
}

void perturb_into(std::span<const double> theta, std::span<const double> noise,
                  const ESConfig& config, std::span<double> out) {
  check_dimension(theta.size(), config, "theta");
  check_dimension(noise.size(), config, "noise");
  check_dimension(out.size(), config, "output");
  std::size_t offset = 0;
  for (const auto& seg : config.noise_scales) {
    for (std::size_t i = offset; i < offset + seg.length; ++i) {
      out[i] = theta[i] + seg.sigma * noise[i];
    }
    offset += seg.length;
  }
}

std::vector<double> perturb(std::span<const double> theta, std::span<const double> noise,
                            const ESConfig& config) {
  std::vector<double> out(theta.size());
  perturb_into(theta, noise, config, out);
  return out;
}

std::vector<double> normalize_rewards(std::span<const double> rewards) {
  const std::size_t n = rewards.size();
  if (n < 2) throw InputError("reward normalization needs at least two rewards");
  double mean = 0.0;
  for (double r : rewards) mean += r;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double r : rewards) var += (r - mean) * (r - mean);
  var /= static_cast<double>(n);
  const double sd = std::sqrt(var);

  std::vector<double> out(n, 0.0);
  if (sd == 0.0) return out;
  for (std::size_t i = 0; i < n; ++i) out[i] = (rewards[i] - mean) / sd;
  return out;
}

std::vector<double> update(std::span<const double> theta, const Generation& generation,
                           const ESConfig& config) {
  check_dimension(theta.size(), config, "theta");
  const std::size_t n = generation.noises.size();
  if (generation.normalized_rewards.size() != n || n == 0) {
    throw InputError("generation needs one normalized reward per noise vector");
  }
  for (const auto& eps : generation.noises) check_dimension(eps.size(), config, "noise");

  std::vector<double> step(theta.size(), 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double r = generation.normalized_rewards[j];
    if (r == 0.0) continue;
    const auto& eps = generation.noises[j];
    for (std::size_t i = 0; i < step.size(); ++i) step[i] += r * eps[i];
  }

  std::vector<double> out(theta.begin(), theta.end());
  std::size_t offset = 0;
  for (const auto& seg : config.noise_scales) {
    const double scale = config.learning_rate / (static_cast<double>(n) * seg.sigma);
    for (std::size_t i = offset; i < offset + seg.length; ++i) out[i] += scale * step[i];
    offset += seg.length;
  }
  return out;
}

OptimizeResult optimize(std::span<const double> initial_theta, const Objective& objective,
                        const ESConfig& config, const GenerationCallback& callback) {
  config.validate();
  check_dimension(initial_theta.size(), config, "initial theta");
  const std::size_t n = config.population_size;
  const std::size_t dim = config.dimension();
  const std::size_t threads = resolve_thread_count(config.threads);

  OptimizeResult result;
  result.theta.assign(initial_theta.begin(), initial_theta.end());
  result.best_theta = result.theta;
  try {
    result.best_reward = objective(result.theta);
  } catch (const std::exception& e) {
    throw ObjectiveError(0, 0, std::string("initial parameter: ") + e.what());
  }

  Generation gen;
  gen.noises.assign(n, std::vector<double>(dim));
  gen.rewards.assign(n, 0.0);
  std::vector<std::vector<double>> candidates(n, std::vector<double>(dim));

  using Clock = std::chrono::steady_clock;
  for (std::size_t t = 0; t < config.max_generations; ++t) {
    const auto started = Clock::now();
    parallel_for(n, threads, [&](std::size_t i) {
      fill_population_noise(gen.noises[i], config, t, i);
      perturb_into(result.theta, gen.noises[i], config, candidates[i]);
      try {
        gen.rewards[i] = objective(candidates[i]);
      } catch (const std::exception& e) {
        throw ObjectiveError(t, i, e.what());
      }
    });

    GenerationStats stats;
    stats.generation = t;
    stats.best_reward = gen.rewards[0];
    stats.min_reward = gen.rewards[0];
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = gen.rewards[i];
      sum += r;
      stats.min_reward = std::min(stats.min_reward, r);
      if (r > stats.best_reward) stats.best_reward = r;
      if (r > result.best_reward) {
        result.best_reward = r;
        result.best_theta = candidates[i];
        result.best_generation = static_cast<long>(t);
      }
    }
    stats.mean_reward = sum / static_cast<double>(n);

    if (n >= 2) {
      gen.normalized_rewards = normalize_rewards(gen.rewards);
    } else {
      gen.normalized_rewards.assign(n, 0.0);
    }
    result.theta = update(result.theta, gen, config);

    stats.wallclock_seconds = std::chrono::duration<double>(Clock::now() - started).count();
    result.history.push_back(stats);
    if (callback) callback(stats);
  }
  return result;
}

}  // namespace rcroute
