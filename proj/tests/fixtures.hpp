#pragma once

#include <string_view>

#include "rcroute/instance_io.hpp"

namespace rcroute::testing {

// Two nets whose default shortest paths cut each other off in either routing
// order. Net 0 has an equally short route along row 1 that leaves room for
// net 1 to detour through the bottom row.
//
//   ....A.
//   B.....
//   .A..B.
//   ...##.
inline constexpr std::string_view kCrossingPairJson =
    R"({"version": 1, "width": 6, "height": 4, "obstacles": [[3,3],[4,3]],
        "nets": [{"start": [4,0], "end": [1,2]}, {"start": [0,1], "end": [4,2]}]})";

inline ProblemInstance crossing_pair() { return load_instance(kCrossingPairJson); }

// 6x6, 3 nets, 4 obstacles; each connects under exactly one of the 6 orders
// when cost maps are zero.
inline ProblemInstance single_order_instance(int which) {
  static constexpr std::uint64_t kSeeds[] = {78, 120, 266, 284};
  return generate_instance(6, 6, 3, 0.1, kSeeds[which]);
}
inline constexpr int kSingleOrderInstances = 4;

}  // namespace rcroute::testing
