#include "trirank/local_router.hpp"

#include <string>

namespace trirank {

const char* to_string(HopKind kind) {
    switch (kind) {
    case HopKind::direct: return "direct";
    case HopKind::odd_rule: return "odd_rule";
    case HopKind::even_v: return "even_v";
    case HopKind::even_w: return "even_w";
    case HopKind::even_x: return "even_x";
    }
    return "?";
}

namespace {

const NeighborView* unique_neighbor_in(const LocalView& u, Sector j) {
    const NeighborView* found = nullptr;
    for (const auto& nb : u.neighbors) {
        if (try_sector_of(u.coords, nb.coords) != j) continue;
        if (found) {
            throw Error(ErrorCode::multiple_odd_neighbors,
                        "node " + std::to_string(u.id) + " has neighbors " +
                            std::to_string(found->id) + " and " +
                            std::to_string(nb.id) + " both in sector " +
                            to_string(j));
        }
        found = &nb;
    }
    return found;
}

} // namespace

NextHop next_hop_local(const LocalView& u, NodeId dest,
                       const RankCoordinates& dest_coords) {
    const Sector sd = sector_of(u.coords, dest_coords);

    for (const auto& nb : u.neighbors) {
        if (nb.id == dest) return {dest, {HopKind::direct, sd}};
    }

    if (is_odd_sector(sd)) {
        const NeighborView* v = unique_neighbor_in(u, sd);
        if (!v) {
            throw Error(u.internal ? ErrorCode::missing_odd_neighbor
                                   : ErrorCode::stuck,
                        "node " + std::to_string(u.id) + " has no neighbor in sector " +
                            to_string(sd) + " holding destination " +
                            std::to_string(dest));
        }
        return {v->id, {HopKind::odd_rule, sd}};
    }

    // Destination in even sector 2i: test the two flanking odd-sector
    // neighbors first, then fall back to the even-sector scan. External
    // nodes may lack the flanking neighbors; that just skips the test.
    const Sector before = sector_step(sd, -1);
    const Sector after = sector_step(sd, +1);

    const NeighborView* v = unique_neighbor_in(u, before);
    if (!v && u.internal) {
        throw Error(ErrorCode::missing_odd_neighbor,
                    "internal node " + std::to_string(u.id) +
                        " has no neighbor in sector " + to_string(before));
    }
    if (v && try_sector_of(v->coords, dest_coords) == sd) {
        return {v->id, {HopKind::even_v, sd}};
    }

    const NeighborView* w = unique_neighbor_in(u, after);
    if (!w && u.internal) {
        throw Error(ErrorCode::missing_odd_neighbor,
                    "internal node " + std::to_string(u.id) +
                        " has no neighbor in sector " + to_string(after));
    }
    if (w && try_sector_of(w->coords, dest_coords) == sd) {
        return {w->id, {HopKind::even_w, sd}};
    }

    const int rho = even_monotone_order(sd);
    const NeighborView* best = nullptr;
    for (const auto& nb : u.neighbors) {
        if (try_sector_of(u.coords, nb.coords) != sd) continue;
        if (try_sector_of(nb.coords, dest_coords) != sd) continue;
        if (!best || nb.coords.rank(rho) < best->coords.rank(rho) ||
            (nb.coords.rank(rho) == best->coords.rank(rho) && nb.id < best->id)) {
            best = &nb;
        }
    }
    if (best) return {best->id, {HopKind::even_x, sd}};

    throw Error(ErrorCode::stuck,
                "no forwarding branch from node " + std::to_string(u.id) +
                    " toward destination " + std::to_string(dest) +
                    " in sector " + to_string(sd));
}

} // namespace trirank
