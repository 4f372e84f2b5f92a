#pragma once

#include "trirank/triangulation.hpp"

namespace trirank::testfix {

inline constexpr NodeId kA1 = 0;
inline constexpr NodeId kA2 = 1;
inline constexpr NodeId kA3 = 2;
inline constexpr NodeId kU = 3;

/// The canonical 4-node instance: one internal node adjacent to all three
/// anchors. Matches what the geometric generator produces for n = 4.
inline Triangulation k4() {
    std::vector<RankCoordinates> coords = {
        {4, 1, 1}, // A1
        {1, 4, 2}, // A2
        {2, 2, 4}, // A3
        {3, 3, 3}, // internal
    };
    std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    return build_triangulation(std::move(coords), std::move(edges), {0, 1, 2});
}

} // namespace trirank::testfix
