#include <doctest.h>

#include "rcroute/astar.hpp"
#include "rcroute/instance_io.hpp"
#include "rcroute/oracles.hpp"
#include "rcroute/validate.hpp"
#include "test_support.hpp"

using namespace rcroute;
using namespace rcroute::testing;

namespace {

void check_well_formed(const GridMap& grid, const Net& net, const std::vector<Vertex>& blocked,
                       const Path& path) {
  REQUIRE_FALSE(path.vertices.empty());
  CHECK(path.vertices.front() == net.start);
  CHECK(path.vertices.back() == net.end);
  const std::set<Vertex> closed(blocked.begin(), blocked.end());
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    const Vertex& v = path.vertices[i];
    CHECK(grid.in_bounds(v));
    CHECK_FALSE(grid.is_obstacle(v));
    CHECK_FALSE(closed.contains(v));
    CHECK(seen.insert(v).second);
    if (i > 0) CHECK(manhattan(path.vertices[i - 1], v) == 1);
  }
}

}  // namespace

TEST_CASE("zero field on an empty 5x5 grid reaches the Manhattan bound") {
  GridMap grid(5, 5);
  const auto zero = CostField::zeros(grid.vertex_count());
  auto found = route({grid, {{0, 0}, {4, 4}}, {}, zero});
  REQUIRE(found);
  CHECK(found->path.length() == 8);
  CHECK(found->cost == 8.0);
}

TEST_CASE("bfs oracle basics") {
  GridMap grid(3, 3);
  CHECK(bfs_oracle(grid, {{0, 0}, {2, 2}}, {}) == 4);
  GridMap walled(3, 3, {{1, 2}, {2, 1}});
  CHECK_FALSE(bfs_oracle(walled, {{0, 0}, {2, 2}}, {}).has_value());
  CHECK_FALSE(bfs_oracle(grid, {{0, 0}, {2, 2}}, {{1, 2}, {2, 1}}).has_value());
  const auto zero = CostField::zeros(walled.vertex_count());
  CHECK_FALSE(route({walled, {{0, 0}, {2, 2}}, {}, zero}).has_value());
}

TEST_CASE("zero-field route matches BFS on random 16x16 maps") {
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    auto req = random_request(rng, 16, 16, 0.2, false);
    const auto expect = bfs_oracle(req.grid, req.net, req.blocked);
    const auto got = route({req.grid, req.net, req.blocked, req.field});
    REQUIRE(expect.has_value() == got.has_value());
    if (got) {
      CHECK(got->path.length() == *expect);
      CHECK(got->path.length() >= manhattan(req.net.start, req.net.end));
      check_well_formed(req.grid, req.net, req.blocked, got->path);
    }
  }
}

TEST_CASE("weighted route matches uniform-cost search") {
  Rng rng(123);
  for (int i = 0; i < 200; ++i) {
    auto req = random_request(rng, 12, 12, 0.2, true);
    const RouteRequest request{req.grid, req.net, req.blocked, req.field};
    const auto expect = dijkstra_oracle(req.grid, request);
    const auto got = route(request);
    REQUIRE(expect.has_value() == got.has_value());
    if (got) {
      CHECK(got->cost == doctest::Approx(*expect).epsilon(1e-12));
      CHECK(path_cost(req.grid, got->path.vertices, req.field) ==
            doctest::Approx(got->cost).epsilon(1e-12));
      check_well_formed(req.grid, req.net, req.blocked, got->path);
    }
  }
}

TEST_CASE("dijkstra oracle reduces to BFS on a zero field") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    auto req = random_request(rng, 10, 10, 0.25, false);
    const auto bfs = bfs_oracle(req.grid, req.net, req.blocked);
    const auto ucs = dijkstra_oracle(req.grid, {req.grid, req.net, req.blocked, req.field});
    REQUIRE(bfs.has_value() == ucs.has_value());
    if (bfs) CHECK(*ucs == static_cast<double>(*bfs));
  }
}

TEST_CASE("a costly shortest corridor pushes the route onto a longer one") {
  // Row 0 is the unique 4-step corridor; every detour through row 1 is 6 steps.
  GridMap grid(5, 2);
  const Net net{{0, 0}, {4, 0}};
  std::vector<double> values(grid.vertex_count(), 0.0);
  for (int x = 1; x <= 3; ++x) values[grid.index({x, 0})] = 100.0;
  const CostField field(values);

  const auto zero = CostField::zeros(grid.vertex_count());
  const auto plain = enumerate_min_cost(grid, net, {}, zero);
  REQUIRE(plain.argmin.size() == 1);
  CHECK(plain.best_cost == 4.0);

  const auto oracle = enumerate_min_cost(grid, net, {}, field);
  REQUIRE(oracle.argmin.size() == 1);
  CHECK(oracle.best_cost == 6.0);

  auto found = route({grid, net, {}, field});
  REQUIRE(found);
  CHECK(found->path.length() == 6);
  CHECK(found->cost == oracle.best_cost);
  CHECK(found->path.vertices == oracle.argmin.front());
}

TEST_CASE("route returns an exhaustive-search optimum on tiny weighted grids") {
  Rng rng(31337);
  for (int i = 0; i < 40; ++i) {
    auto req = random_request(rng, 4, 4, 0.15, true);
    const std::set<Vertex> blocked(req.blocked.begin(), req.blocked.end());
    const auto oracle = enumerate_min_cost(req.grid, req.net, blocked, req.field);
    const auto got = route({req.grid, req.net, req.blocked, req.field});
    REQUIRE(got.has_value() == (oracle.path_count > 0));
    if (got) CHECK(got->cost == doctest::Approx(oracle.best_cost).epsilon(1e-12));
  }
}

TEST_CASE("route is deterministic") {
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    auto req = random_request(rng, 16, 16, 0.1, i % 2 == 0);
    const RouteRequest request{req.grid, req.net, req.blocked, req.field};
    const auto a = route(request);
    const auto b = route(request);
    REQUIRE(a.has_value() == b.has_value());
    if (a) CHECK(a->path == b->path);
  }
}

TEST_CASE("blocking more vertices never lowers the cost") {
  Rng rng(77);
  for (int i = 0; i < 100; ++i) {
    auto req = random_request(rng, 12, 12, 0.15, true);
    const auto before = route({req.grid, req.net, req.blocked, req.field});
    auto more = req.blocked;
    for (std::size_t v = 0; v < req.grid.vertex_count(); ++v) {
      const Vertex u = req.grid.vertex(v);
      if (u != req.net.start && u != req.net.end && rng() % 10 == 0) more.push_back(u);
    }
    const auto after = route({req.grid, req.net, more, req.field});
    if (!before) {
      CHECK_FALSE(after.has_value());
    } else if (after) {
      CHECK(after->cost >= before->cost - 1e-9);
    }
  }
}

TEST_CASE("route rejects broken requests") {
  GridMap grid(4, 4, {{3, 3}});
  const auto zero = CostField::zeros(grid.vertex_count());
  CHECK_THROWS_AS(route({grid, {{0, 0}, {4, 0}}, {}, zero}), InputError);
  CHECK_THROWS_AS(route({grid, {{0, 0}, {3, 3}}, {}, zero}), InputError);
  CHECK_THROWS_AS(route({grid, {{0, 0}, {0, 0}}, {}, zero}), InputError);
  CHECK_THROWS_AS(route({grid, {{0, 0}, {2, 0}}, {{2, 0}}, zero}), InputError);
  const auto short_field = CostField::zeros(3);
  CHECK_THROWS_AS(route({grid, {{0, 0}, {2, 0}}, {}, short_field}), InputError);
  CHECK_THROWS_AS(CostField({0.0, -0.5}), InputError);
}
