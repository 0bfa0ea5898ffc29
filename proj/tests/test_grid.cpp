#include <doctest.h>

#include "rcroute/grid.hpp"
#include "rcroute/instance_io.hpp"
#include "rcroute/validate.hpp"
#include "test_support.hpp"

using namespace rcroute;

TEST_CASE("manhattan distance") {
  CHECK(manhattan({0, 0}, {3, 4}) == 7);
  CHECK(manhattan({2, 2}, {2, 2}) == 0);
  CHECK(manhattan({5, 1}, {1, 1}) == 4);
}

TEST_CASE("neighbors on an empty 3x3 grid") {
  GridMap grid(3, 3);
  // Order is up, down, left, right.
  CHECK(neighbors(grid, {0, 0}) == std::vector<Vertex>{{0, 1}, {1, 0}});
  CHECK(neighbors(grid, {1, 1}) == std::vector<Vertex>{{1, 0}, {1, 2}, {0, 1}, {2, 1}});
}

TEST_CASE("neighbors skip obstacles and reject out-of-bounds input") {
  GridMap grid(3, 3, {{1, 0}});
  CHECK(neighbors(grid, {0, 0}) == std::vector<Vertex>{{0, 1}});
  CHECK_THROWS_AS(neighbors(grid, {3, 0}), InputError);
  CHECK_THROWS_AS(neighbors(grid, {0, -1}), InputError);
}

TEST_CASE("neighbors never leave the free grid") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto inst = generate_instance(9, 7, 1, 0.3, rng());
    const GridMap& g = inst.grid();
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      auto ns = neighbors(g, g.vertex(i));
      CHECK(ns.size() <= 4);
      for (const Vertex& n : ns) {
        CHECK(g.in_bounds(n));
        CHECK_FALSE(g.is_obstacle(n));
        CHECK(manhattan(n, g.vertex(i)) == 1);
      }
    }
  }
}

TEST_CASE("grid and instance constructors enforce invariants") {
  CHECK_THROWS_AS(GridMap(0, 3), InputError);
  CHECK_THROWS_AS(GridMap(3, 3, {{3, 3}}), InputError);
  GridMap grid(4, 4, {{1, 1}});
  CHECK(grid.vertex_count() == 16);
  CHECK_THROWS_AS(ProblemInstance(grid, {{{1, 1}, {0, 0}}}), InputError);
  CHECK_THROWS_AS(ProblemInstance(grid, {{{0, 0}, {0, 0}}}), InputError);
  CHECK_THROWS_AS(ProblemInstance(grid, {{{0, 0}, {2, 2}}, {{2, 2}, {3, 3}}}), InputError);
  CHECK_NOTHROW(ProblemInstance(grid, {{{0, 0}, {2, 2}}, {{3, 0}, {3, 3}}}));
}

TEST_CASE("obstacles are reported in lexicographic order") {
  GridMap grid(4, 4, {{3, 0}, {0, 2}, {0, 1}, {2, 3}, {0, 1}});
  CHECK(grid.obstacle_count() == 4);
  CHECK(grid.obstacles() == std::vector<Vertex>{{0, 1}, {0, 2}, {2, 3}, {3, 0}});
}

TEST_CASE("path length counts edges") {
  CHECK(Path{{{0, 0}}}.length() == 0);
  CHECK(Path{{{0, 0}, {1, 0}, {1, 1}}}.length() == 2);
  RoutingOutcome partial{{Path{{{0, 0}, {1, 0}}}, std::nullopt}};
  CHECK(partial.connected_count() == 1);
  CHECK_FALSE(partial.total_length().has_value());
}

TEST_SUITE("validate_outcome") {
  const ProblemInstance two_nets(GridMap(4, 3), {{{0, 0}, {3, 0}}, {{0, 2}, {3, 2}}});

  TEST_CASE("valid fully connected outcome") {
    RoutingOutcome out{{Path{{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
                        Path{{{0, 2}, {1, 2}, {2, 2}, {3, 2}}}}};
    auto report = validate_outcome(two_nets, out);
    CHECK(report.valid);
    REQUIRE(report.total_length.has_value());
    CHECK(*report.total_length == 6);
  }

  TEST_CASE("shared vertex is flagged") {
    RoutingOutcome out{{Path{{{0, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 0}}},
                        Path{{{0, 2}, {1, 2}, {1, 1}, {2, 1}, {2, 2}, {3, 2}}}}};
    auto report = validate_outcome(two_nets, out);
    CHECK_FALSE(report.valid);
    REQUIRE(report.overlaps.size() == 1);
    CHECK(report.overlaps[0] == std::pair<std::size_t, std::size_t>{0, 1});
  }

  TEST_CASE("malformed paths are flagged per check") {
    RoutingOutcome jump{{Path{{{0, 0}, {2, 0}, {3, 0}}}, std::nullopt}};
    auto r1 = validate_outcome(two_nets, jump);
    CHECK_FALSE(r1.nets[0].contiguous);
    CHECK_FALSE(r1.consistent);

    RoutingOutcome wrong_end{{Path{{{0, 0}, {1, 0}}}, std::nullopt}};
    CHECK_FALSE(validate_outcome(two_nets, wrong_end).nets[0].endpoints_match);

    RoutingOutcome loop{{Path{{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}, {1, 0}, {2, 0}, {3, 0}}},
                         std::nullopt}};
    CHECK_FALSE(validate_outcome(two_nets, loop).nets[0].simple);

    const ProblemInstance walled(GridMap(4, 3, {{1, 0}}), {{{0, 0}, {3, 0}}});
    RoutingOutcome through{{Path{{{0, 0}, {1, 0}, {2, 0}, {3, 0}}}}};
    CHECK_FALSE(validate_outcome(walled, through).nets[0].avoids_obstacles);

    RoutingOutcome pin_thief{{Path{{{0, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 1}, {2, 1}, {3, 1}, {3, 0}}},
                              std::nullopt}};
    CHECK_FALSE(validate_outcome(two_nets, pin_thief).nets[0].avoids_foreign_pins);
  }

  TEST_CASE("partial outcome is consistent but not valid") {
    RoutingOutcome out{{Path{{{0, 0}, {1, 0}, {2, 0}, {3, 0}}}, std::nullopt}};
    auto report = validate_outcome(two_nets, out);
    CHECK(report.consistent);
    CHECK_FALSE(report.valid);
    CHECK(report.connected == 1);
  }

  TEST_CASE("wrong number of path slots") {
    RoutingOutcome out{{std::nullopt}};
    CHECK_FALSE(validate_outcome(two_nets, out).consistent);
  }

  TEST_CASE("accepted paths have vertex count minus one edges") {
    RoutingOutcome out{{Path{{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
                        Path{{{0, 2}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}}}};
    auto report = validate_outcome(two_nets, out);
    REQUIRE(report.valid);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(report.nets[i].length ==
            static_cast<std::int64_t>(out.paths[i]->vertices.size()) - 1);
    }
  }
}
