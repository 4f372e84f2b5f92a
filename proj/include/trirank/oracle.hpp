#pragma once

#include "trirank/router.hpp"

#include <cstdint>
#include <vector>

namespace trirank {

/// Aggregate of an all-ordered-pairs routing sweep. Stretch is the ratio of
/// greedy hop count to shortest-path hop count, averaged over delivered
/// pairs; it is at least 1 whenever everything is delivered.
struct SweepStats {
    std::size_t pairs_total = 0;
    std::size_t pairs_delivered = 0;
    std::size_t max_hops = 0;
    double mean_stretch = 0.0;
    std::vector<Witness> violations;

    bool operator==(const SweepStats&) const = default;
};

struct SweepOptions {
    int jobs = 0; // 0 = library default thread count
};

struct PropositionCheckOptions {
    /// The exhaustive triple scan is cubic; refuse instances above this
    /// size unless forced.
    std::size_t max_nodes = 200;
    bool force = false;
    int jobs = 0;
};

/// Exact unweighted hop distances from s to every node; -1 marks
/// unreachable nodes.
std::vector<std::int32_t> bfs_distances(const Triangulation& g, NodeId s);

/// Exact shortest-path hop count. Throws Error(unreachable) when the pair
/// is disconnected, which no valid instance is.
std::size_t bfs_distance(const Triangulation& g, NodeId s, NodeId d);

/// Exhaustive structural checks feeding the routing guarantees:
///   - sector_transitivity: equal sectors chain across node triples;
///   - odd_sector_exclusion: for an edge (u,v) and a third node D sharing
///     v's odd sector of u, D avoids the three sectors of v that would
///     reverse the monotone coordinate;
///   - even_branch_availability: a destination in an even sector of u is
///     adjacent or reachable by one of the three even-case branches.
/// Returns all witnesses, sorted canonically. The parallel and serial
/// variants return identical lists.
std::vector<Witness> check_propositions(const Triangulation& g,
                                        const PropositionCheckOptions& opts = {});
std::vector<Witness> check_propositions_serial(const Triangulation& g,
                                               const PropositionCheckOptions& opts = {});

/// Routes every ordered pair, certifies every trace, and compares hop
/// counts against BFS. Any undelivered pair, router error, or certificate
/// failure lands in `violations`. The parallel and serial variants return
/// identical stats (stretch sums are accumulated per source and reduced in
/// index order).
SweepStats full_sweep(const Triangulation& g, const SweepOptions& opts = {});
SweepStats full_sweep_serial(const Triangulation& g);

} // namespace trirank
