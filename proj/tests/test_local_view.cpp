// Compiles against the decision header alone: the forwarding choice must be
// expressible with nothing but the deciding node's own coordinates, the
// destination's coordinates, and the neighbor (id, coordinates) list. No
// graph type is visible here.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trirank/local_router.hpp"

#include <type_traits>

using namespace trirank;

static_assert(std::is_invocable_r_v<NextHop, decltype(&next_hop_local),
                                    const LocalView&, NodeId,
                                    const RankCoordinates&>,
              "the decision function sees only the local view and the "
              "destination coordinates");

namespace {

LocalView view_of(NodeId id, RankCoordinates coords, bool internal,
                  std::vector<NeighborView> neighbors) {
    LocalView v;
    v.id = id;
    v.coords = coords;
    v.internal = internal;
    v.neighbors = std::move(neighbors);
    return v;
}

} // namespace

TEST_CASE("a neighboring destination is taken directly") {
    const auto u = view_of(3, {3, 3, 3}, true,
                           {{0, {4, 1, 1}}, {1, {1, 4, 2}}, {2, {2, 2, 4}}});
    const auto hop = next_hop_local(u, 0, {4, 1, 1});
    CHECK(hop.node == 0);
    CHECK(hop.decision.kind == HopKind::direct);
    CHECK(hop.decision.sector_at_decision == Sector::s1);
}

TEST_CASE("an odd-sector destination goes to that sector's unique neighbor") {
    const auto u = view_of(3, {3, 3, 3}, true,
                           {{7, {4, 2, 2}}, {8, {1, 4, 2}}, {9, {2, 2, 4}}});
    const auto hop = next_hop_local(u, 99, {5, 1, 1}); // dest in sector 1
    CHECK(hop.node == 7);                              // neighbor in sector 1
    CHECK(hop.decision.kind == HopKind::odd_rule);
    CHECK(hop.decision.sector_at_decision == Sector::s1);
}

TEST_CASE("even case: the preceding odd neighbor wins when it keeps the sector") {
    // dest (1,5,4) sits in sector 4 of u; v = (2,4,1) is u's sector-3
    // neighbor and dest is in v's sector 4 as well.
    const auto u = view_of(3, {3, 3, 3}, true,
                           {{10, {2, 4, 1}}, {11, {1, 2, 5}}});
    const auto hop = next_hop_local(u, 99, {1, 5, 4});
    CHECK(hop.node == 10);
    CHECK(hop.decision.kind == HopKind::even_v);
    CHECK(hop.decision.sector_at_decision == Sector::s4);
}

TEST_CASE("even case: the following odd neighbor is the second choice") {
    // dest (1,4,5) in sector 4 of u; the sector-3 neighbor loses the
    // destination (sector 5 of it), the sector-5 neighbor keeps it.
    const auto u = view_of(3, {3, 3, 3}, true,
                           {{10, {2, 5, 1}}, {11, {2, 1, 4}}});
    const auto hop = next_hop_local(u, 99, {1, 4, 5});
    CHECK(hop.node == 11);
    CHECK(hop.decision.kind == HopKind::even_w);
}

TEST_CASE("even case: fallback scans the even sector, preferring progress") {
    // Neither flanking neighbor keeps dest (1,6,6) in sector 4; among the
    // qualifying sector-4 neighbors the one with the smaller descending
    // coordinate (rank_1) wins even with a larger id.
    const auto u = view_of(9, {5, 4, 4}, true,
                           {{32, {3, 6, 1}},   // sector 3 of u, loses dest
                            {33, {3, 1, 6}},   // sector 5 of u, loses dest
                            {30, {4, 5, 5}},   // sector 4, keeps dest, rank1 4
                            {31, {2, 5, 5}}}); // sector 4, keeps dest, rank1 2
    const auto hop = next_hop_local(u, 99, {1, 6, 6});
    CHECK(hop.node == 31);
    CHECK(hop.decision.kind == HopKind::even_x);
    CHECK(hop.decision.sector_at_decision == Sector::s4);
}

TEST_CASE("even-sector ties fall back to the smaller id") {
    // Both 20 and 21 keep dest (1,7,6) in sector 4 and share rank_1 = 2;
    // the smaller id wins.
    const auto u = view_of(9, {5, 4, 4}, true,
                           {{32, {3, 7, 1}},
                            {33, {3, 1, 6}},
                            {21, {2, 5, 5}},
                            {20, {2, 6, 5}}});
    const auto hop = next_hop_local(u, 99, {1, 7, 6});
    CHECK(hop.decision.kind == HopKind::even_x);
    CHECK(hop.node == 20);
}

TEST_CASE("an internal node missing a flanking odd neighbor is an error") {
    const auto u = view_of(3, {3, 3, 3}, true, {{11, {1, 2, 5}}});
    CHECK_THROWS_AS((void)next_hop_local(u, 99, {1, 5, 4}), Error);
    try {
        (void)next_hop_local(u, 99, {1, 5, 4});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::missing_odd_neighbor);
    }
}

TEST_CASE("an external node skips absent odd neighbors and scans instead") {
    // Same view flagged external: missing flanking neighbors are fine and
    // the even-sector scan still finds a qualifying node.
    const auto u = view_of(9, {5, 4, 4}, false, {{31, {2, 5, 5}}});
    const auto hop = next_hop_local(u, 99, {1, 6, 6});
    CHECK(hop.node == 31);
    CHECK(hop.decision.kind == HopKind::even_x);
}

TEST_CASE("no applicable branch is a stuck error") {
    const auto u = view_of(9, {5, 4, 4}, false, {});
    CHECK_THROWS_AS((void)next_hop_local(u, 99, {1, 6, 6}), Error);
    try {
        (void)next_hop_local(u, 99, {1, 6, 6});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::stuck);
    }
}

TEST_CASE("hop kinds render stable names") {
    CHECK(std::string(to_string(HopKind::direct)) == "direct");
    CHECK(std::string(to_string(HopKind::odd_rule)) == "odd_rule");
    CHECK(std::string(to_string(HopKind::even_v)) == "even_v");
    CHECK(std::string(to_string(HopKind::even_w)) == "even_w");
    CHECK(std::string(to_string(HopKind::even_x)) == "even_x");
}
