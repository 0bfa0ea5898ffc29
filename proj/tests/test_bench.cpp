#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "rcroute/bench.hpp"
#include "rcroute/instance_io.hpp"
#include "rcroute/random.hpp"
#include "rcroute/ranking_cost.hpp"
#include "rcroute/validate.hpp"

using namespace rcroute;
using namespace rcroute::testing;

namespace {

AlgoResult record(std::string algo, std::string inst, bool ok, std::int64_t len = 0,
                  std::uint64_t seed = 0) {
  AlgoResult r;
  r.algorithm = std::move(algo);
  r.instance = std::move(inst);
  r.group = "g";
  r.seed = seed;
  r.success = ok;
  r.connected = ok ? 2 : 1;
  if (ok) r.length = len;
  return r;
}

std::vector<NamedInstance> small_suite(int count, int nets, std::uint64_t seed) {
  std::vector<NamedInstance> out;
  for (int i = 0; i < count; ++i) {
    auto inst = generate_instance(10, 10, nets, 0.1, seed + static_cast<std::uint64_t>(i));
    out.push_back({"i" + std::to_string(i), instance_group(inst), std::move(inst)});
  }
  return out;
}

SolverConfig tiny_solver() {
  SolverConfig cfg;
  cfg.es.max_generations = 3;
  cfg.es.population_size = 6;
  return cfg;
}

}  // namespace

TEST_CASE("sampled orders are distinct, nested and capped at k!") {
  const auto five = sample_distinct_orders(4, 5, 7);
  const auto many = sample_distinct_orders(4, 200, 7);
  CHECK(five.size() == 5);
  CHECK(many.size() == 24);
  CHECK(std::equal(five.begin(), five.end(), many.begin()));
  CHECK(std::set(many.begin(), many.end()).size() == 24);
  for (const auto& o : many) CHECK(std::is_permutation(o.begin(), o.end(), many.front().begin()));
  CHECK(sample_distinct_orders(4, 5, 8) != five);
}

TEST_CASE("seq A* with one net is a single shortest path") {
  const auto inst = generate_instance(9, 9, 1, 0.0, 3);
  const auto a = seq_astar_baseline(inst, 1, 0);
  const auto b = seq_astar_baseline(inst, 50, 4);
  CHECK(a.outcome == b.outcome);
  REQUIRE(a.outcome.paths[0]);
  CHECK(a.outcome.paths[0]->length() == manhattan(inst.nets()[0].start, inst.nets()[0].end));
}

TEST_CASE("seq A* over all orders matches explicit enumeration") {
  Rng rng(90);
  for (int t = 0; t < 40; ++t) {
    const auto inst = generate_instance(7, 7, 3, 0.15, rng());
    std::vector<std::size_t> order{0, 1, 2};
    std::size_t best_conn = 0;
    std::int64_t best_len = std::numeric_limits<std::int64_t>::max();
    do {
      const auto out = sequential_route(inst, order, {});
      const std::size_t conn = out.connected_count();
      std::int64_t len = 0;
      for (const auto& p : out.paths) len += p ? p->length() : 0;
      if (conn < 3) len = std::numeric_limits<std::int64_t>::max();
      if (conn > best_conn || (conn == best_conn && len < best_len)) {
        best_conn = conn;
        best_len = len;
      }
    } while (std::next_permutation(order.begin(), order.end()));

    const auto got = seq_astar_baseline(inst, 6, t);
    CHECK(got.orders_tried == 6);
    CHECK(got.outcome.connected_count() == best_conn);
    if (best_conn == 3) CHECK(*got.outcome.total_length() == best_len);
  }
}

TEST_CASE("seq A* fails the crossing pair for every order") {
  const auto got = seq_astar_baseline(crossing_pair(), 100, 0);
  CHECK(got.orders_tried == 2);
  CHECK_FALSE(got.outcome.fully_connected());
  CHECK(got.outcome.connected_count() == 1);
}

TEST_CASE("success_rate") {
  std::vector<AlgoResult> rs;
  for (int i = 0; i < 50; ++i) rs.push_back(record("a", std::to_string(i), i >= 4, 10));
  CHECK(success_rate(rs) == doctest::Approx(0.92));
  std::reverse(rs.begin(), rs.end());
  CHECK(success_rate(rs) == doctest::Approx(0.92));
  CHECK(success_rate(std::vector<AlgoResult>(3, record("a", "x", true, 1))) == 1.0);
  CHECK(success_rate(std::vector<AlgoResult>(3, record("a", "x", false))) == 0.0);
  CHECK_THROWS_AS(success_rate(std::vector<AlgoResult>{}), InputError);
}

TEST_CASE("common_average_length") {
  SUBCASE("intersection only") {
    std::map<std::string, std::vector<AlgoResult>> by_algo;
    by_algo["A"] = {record("A", "1", true, 10), record("A", "2", true, 20), record("A", "3", false)};
    by_algo["B"] = {record("B", "1", false), record("B", "2", true, 30), record("B", "3", true, 5)};
    const auto c = common_average_length(by_algo);
    CHECK(c.common_instances == std::vector<std::string>{"2"});
    CHECK(c.average.at("A") == 20.0);
    CHECK(c.average.at("B") == 30.0);
  }
  SUBCASE("single algorithm") {
    std::map<std::string, std::vector<AlgoResult>> by_algo;
    by_algo["A"] = {record("A", "1", true, 10), record("A", "2", true, 20), record("A", "3", false)};
    CHECK(common_average_length(by_algo).average.at("A") == 15.0);
  }
  SUBCASE("identical outcomes") {
    std::map<std::string, std::vector<AlgoResult>> by_algo;
    by_algo["A"] = {record("A", "1", true, 10), record("A", "2", true, 14)};
    by_algo["B"] = {record("B", "1", true, 10), record("B", "2", true, 14)};
    const auto c = common_average_length(by_algo);
    CHECK(c.average.at("A") == c.average.at("B"));
  }
  SUBCASE("no common instance is reported, not thrown") {
    std::map<std::string, std::vector<AlgoResult>> by_algo;
    by_algo["A"] = {record("A", "1", true, 10), record("A", "2", false)};
    by_algo["B"] = {record("B", "1", false), record("B", "2", true, 4)};
    const auto c = common_average_length(by_algo);
    CHECK_FALSE(c.has_common());
    CHECK(c.average.empty());
  }
  SUBCASE("an instance must be solved under every seed") {
    std::map<std::string, std::vector<AlgoResult>> by_algo;
    by_algo["A"] = {record("A", "1", true, 10, 0), record("A", "1", false, 0, 1),
                    record("A", "2", true, 8, 0), record("A", "2", true, 8, 1)};
    const auto c = common_average_length(by_algo);
    CHECK(c.common_instances == std::vector<std::string>{"2"});
  }
}

TEST_CASE("algorithm specs") {
  CHECK(parse_algorithm("seq-astar:5").num_orders == 5);
  CHECK(parse_algorithm("seq-astar:200").display_name() == "Seq A*(200)");
  CHECK(parse_algorithm("rc").display_name() == "Ranking Cost I");
  CHECK(parse_algorithm("rc-pp").post_process);
  CHECK(parse_algorithm("cml").mode == TrainingMode::kCostOnly);
  CHECK(parse_algorithm("rl").mode == TrainingMode::kRankingOnly);
  CHECK(parse_algorithm_list("seq-astar:5,rc").size() == 2);
  CHECK_THROWS_AS(parse_algorithm("seq-astar:0"), InputError);
  CHECK_THROWS_AS(parse_algorithm("vin"), InputError);
}

TEST_CASE("instance groups") {
  CHECK(instance_group(generate_instance(16, 16, 4, 0.0, 1)) == "16x16 (4 pairs) no obstacle");
  CHECK(instance_group(generate_instance(16, 16, 4, 0.1, 1)) == "16x16 (4 pairs) with obstacles");
}

TEST_CASE("run_benchmark") {
  BenchOptions opts;
  opts.solver = tiny_solver();
  opts.threads = 1;

  SUBCASE("one cell gives one record") {
    const auto suite = small_suite(1, 2, 0);
    const std::vector<AlgorithmSpec> algos{parse_algorithm("rc")};
    const std::vector<std::uint64_t> seeds{3};
    const auto report = run_benchmark(suite, algos, seeds, opts);
    REQUIRE(report.records.size() == 1);
    CHECK(report.records[0].algorithm == "rc");
    CHECK(report.records[0].seed == 3);
    CHECK(report.records[0].error.empty());
  }

  SUBCASE("more sampled orders never lose") {
    const auto suite = small_suite(12, 5, 100);
    const auto algos = parse_algorithm_list("seq-astar:5,seq-astar:200");
    const std::vector<std::uint64_t> seeds{0, 1, 2};
    const auto report = run_benchmark(suite, algos, seeds, opts);
    CHECK(report.records.size() == 12 * 2 * 3);
    for (std::uint64_t seed : seeds) {
      std::vector<AlgoResult> few, many;
      for (const auto& r : report.records) {
        if (r.seed != seed) continue;
        (r.algorithm == "seq-astar:5" ? few : many).push_back(r);
      }
      CHECK(success_rate(many) >= success_rate(few));
    }
  }

  SUBCASE("deterministic, thread-independent, and reproducible from records") {
    const auto suite = small_suite(4, 3, 7);
    const auto algos = parse_algorithm_list("seq-astar:5,cml,rc,rc-pp");
    const std::vector<std::uint64_t> seeds{0, 1};
    const auto a = run_benchmark(suite, algos, seeds, opts);
    opts.threads = 3;
    const auto b = run_benchmark(suite, algos, seeds, opts);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      CHECK(a.records[i].algorithm == b.records[i].algorithm);
      CHECK(a.records[i].success == b.records[i].success);
      CHECK(a.records[i].length == b.records[i].length);
    }

    const std::string text = format_records(a.records);
    const auto back = summarize(parse_records(text));
    CHECK(format_table(back) == format_table(summarize(a.records)));
    CHECK(format_records(back.records) == text);
    CHECK(format_table(a).find("Ranking Cost II") != std::string::npos);
  }
}
