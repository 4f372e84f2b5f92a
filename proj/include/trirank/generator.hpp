#pragma once

#include "trirank/triangulation.hpp"

#include <array>
#include <cstdint>
#include <span>

namespace trirank {

struct GeneratorConfig {
    std::uint32_t n = 4;       // total node count, anchors included; >= 4
    std::uint64_t seed = 0;
    double triangle_side = 1.0;
};

/// Identifier of the generation algorithm, recorded in file metadata so an
/// instance can be reproduced by an independent implementation: anchors on
/// an equilateral triangle, interior points from mt19937_64 with the 53-bit
/// mantissa mapping, barycentric fold, distance orders, min-rule edges.
inline constexpr const char* kGeneratorAlgorithm =
    "equilateral-ranks/mt19937_64-u53/min-rule/1";

/// Vertices of the equilateral triangle the anchors occupy.
std::array<Point, 3> anchor_positions(double side);

/// Rank coordinates for the node list [anchor1, anchor2, anchor3,
/// interior...]: in order i, nodes sort by descending distance to anchor i
/// (farther = smaller rank), ties broken by ascending node id. Anchor i is
/// at distance zero from itself and therefore maximal in its own order.
std::vector<RankCoordinates> orders_from_points(std::span<const Point> interior,
                                                const std::array<Point, 3>& anchors);

/// Builds a random instance: n-3 points sampled uniformly inside the open
/// anchor triangle from the seeded deterministic stream, distance orders
/// turned into rank coordinates, and one edge from every node to the
/// rank-minimal element of each of its nonempty odd sectors, plus the three
/// anchor-anchor edges. Identical configs produce bit-identical instances.
/// Throws Error(degenerate_input) when n < 4 or the side is not positive.
Triangulation generate(const GeneratorConfig& cfg);

} // namespace trirank
