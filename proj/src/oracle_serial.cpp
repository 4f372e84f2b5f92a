// Serial reference implementations of the sweep and proposition checkers.
// These are the baseline the OpenMP kernels are tested and benchmarked
// against, so they stay as plain as possible.

#include "oracle_detail.hpp"

#include <queue>
#include <string>

namespace trirank {

std::vector<std::int32_t> bfs_distances(const Triangulation& g, NodeId s) {
    if (s >= g.size()) {
        throw Error(ErrorCode::unknown_node,
                    "BFS source " + std::to_string(s) + " out of range");
    }
    std::vector<std::int32_t> dist(g.size(), -1);
    std::queue<NodeId> frontier;
    dist[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
        const NodeId u = frontier.front();
        frontier.pop();
        for (NodeId v : g.adjacency[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                frontier.push(v);
            }
        }
    }
    return dist;
}

std::size_t bfs_distance(const Triangulation& g, NodeId s, NodeId d) {
    if (d >= g.size()) {
        throw Error(ErrorCode::unknown_node,
                    "BFS target " + std::to_string(d) + " out of range");
    }
    const auto dist = bfs_distances(g, s);
    if (dist[d] < 0) {
        throw Error(ErrorCode::unreachable,
                    "no path from " + std::to_string(s) + " to " + std::to_string(d));
    }
    return static_cast<std::size_t>(dist[d]);
}

std::vector<Witness> check_propositions_serial(const Triangulation& g,
                                               const PropositionCheckOptions& opts) {
    const std::size_t n = g.size();
    if (n > opts.max_nodes && !opts.force) {
        throw Error(ErrorCode::too_large,
                    "exhaustive triple scan on " + std::to_string(n) +
                        " nodes exceeds the cap of " + std::to_string(opts.max_nodes) +
                        "; set force to override");
    }
    const detail::SectorMatrix sec(g);
    std::vector<Witness> violations;

    // Sector chains across node triples.
    for (NodeId a = 0; a < n; ++a) {
        for (NodeId b = 0; b < n; ++b) {
            if (b == a) continue;
            const int jab = sec(a, b);
            if (jab == 0) continue;
            for (NodeId c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                if (sec(b, c) != jab) continue;
                if (sec(a, c) != jab) {
                    violations.push_back({"sector_transitivity", {a, b, c}, ""});
                }
            }
        }
    }

    // Third nodes sharing a neighbor's odd sector avoid the reversing
    // sectors of that neighbor.
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : g.adjacency[u]) {
            const int j = sec(u, v);
            if (j == 0 || j % 2 == 0) continue;
            for (NodeId d = 0; d < n; ++d) {
                if (d == u || d == v) continue;
                if (sec(u, d) != j) continue;
                if (detail::excluded_after_odd(j, sec(v, d))) {
                    violations.push_back({"odd_sector_exclusion", {u, v, d}, ""});
                }
            }
        }
    }

    // A destination in an even sector is adjacent or one even-case branch
    // applies.
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId d = 0; d < n; ++d) {
            if (d == u || g.adjacent(u, d)) continue;
            const int j = sec(u, d);
            if (j == 0 || j % 2 == 1) continue;
            const int before = (j + 4) % 6 + 1; // j-1 on the 1..6 wheel
            const int after = j % 6 + 1;        // j+1
            bool available = false;
            for (NodeId x : g.adjacency[u]) {
                const int jx = sec(u, x);
                if ((jx == before || jx == j || jx == after) && sec(x, d) == j) {
                    available = true;
                    break;
                }
            }
            if (!available) {
                violations.push_back({"even_branch_availability", {u, d}, ""});
            }
        }
    }

    detail::sort_witnesses(violations);
    return violations;
}

SweepStats full_sweep_serial(const Triangulation& g) {
    const std::size_t n = g.size();
    SweepStats stats;
    double stretch_sum = 0.0;
    std::size_t stretch_pairs = 0;

    for (NodeId s = 0; s < n; ++s) {
        const auto dist = bfs_distances(g, s);
        double local_sum = 0.0;
        for (NodeId d = 0; d < n; ++d) {
            if (d == s) continue;
            stats.pairs_total += 1;
            RouteTrace trace;
            try {
                trace = route(g, s, d);
            } catch (const RouteError& e) {
                stats.violations.push_back(
                    {"route_error", {s, d},
                     std::string(to_string(e.code())) + ": " + e.what()});
                continue;
            }
            stats.pairs_delivered += 1;
            stats.max_hops = std::max(stats.max_hops, trace.hops.size());
            if (!is_greedy_path(g, trace).ok()) {
                stats.violations.push_back(
                    {"greedy_certificate", {s, d}, "no monotone rank coordinate"});
            }
            if (dist[d] <= 0) {
                stats.violations.push_back({"unreachable", {s, d}, ""});
            } else {
                local_sum += static_cast<double>(trace.hops.size()) /
                             static_cast<double>(dist[d]);
                stretch_pairs += 1;
            }
        }
        stretch_sum += local_sum;
    }
    stats.mean_stretch =
        stretch_pairs > 0 ? stretch_sum / static_cast<double>(stretch_pairs) : 0.0;
    return stats;
}

} // namespace trirank
