#pragma once

// The forwarding decision, stated over exactly the information a node holds
// locally: its own coordinates, the destination's coordinates, and the
// (id, coordinates) of its neighbors. This header deliberately does not
// know the graph type; tests compile it standalone to pin that down.

#include "trirank/schnyder.hpp"

#include <vector>

namespace trirank {

enum class HopKind { direct, odd_rule, even_v, even_w, even_x };

const char* to_string(HopKind kind);

struct HopDecision {
    HopKind kind = HopKind::direct;
    Sector sector_at_decision = Sector::s1; // sector of the destination
                                            // relative to the deciding node
    bool operator==(const HopDecision&) const = default;
};

struct NeighborView {
    NodeId id = 0;
    RankCoordinates coords;
};

struct LocalView {
    NodeId id = 0;
    RankCoordinates coords;
    bool internal = true; // external nodes may lack odd-sector neighbors
    std::vector<NeighborView> neighbors;
};

struct NextHop {
    NodeId node = 0;
    HopDecision decision;
};

/// One forwarding step from the node described by `u` toward `dest`:
///   - a neighboring destination is taken directly;
///   - a destination in an odd sector goes to that sector's unique
///     neighbor;
///   - a destination in even sector 2i goes to the neighbor v in sector
///     2i-1 if the destination stays in v's sector 2i, else likewise for
///     the neighbor w in sector 2i+1, else to a neighbor x in sector 2i
///     keeping the destination in x's sector 2i (ties: smallest descending
///     rank, then smallest id).
///
/// Throws Error(missing_odd_neighbor) when an internal node lacks a
/// required odd-sector neighbor and Error(stuck) when no branch yields a
/// node; both signal a broken instance, never a valid one.
NextHop next_hop_local(const LocalView& u, NodeId dest,
                       const RankCoordinates& dest_coords);

} // namespace trirank
