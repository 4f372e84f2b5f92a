// OpenMP kernels for the all-pairs sweep and the proposition scan. Work is
// partitioned by source (or outer node) with per-index accumulators, then
// merged in index order, so the results match the serial reference exactly,
// floating-point sums included, for any thread count.

#include "oracle_detail.hpp"

#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace trirank {

namespace {

int resolve_threads(int jobs) {
#ifdef _OPENMP
    return jobs > 0 ? jobs : omp_get_max_threads();
#else
    (void)jobs;
    return 1;
#endif
}

struct SourceSweep {
    std::size_t pairs = 0;
    std::size_t delivered = 0;
    std::size_t max_hops = 0;
    std::size_t stretch_pairs = 0;
    double stretch_sum = 0.0;
    std::vector<Witness> violations;
};

SourceSweep sweep_from(const Triangulation& g, NodeId s) {
    SourceSweep acc;
    const auto dist = bfs_distances(g, s);
    for (NodeId d = 0; d < g.size(); ++d) {
        if (d == s) continue;
        acc.pairs += 1;
        RouteTrace trace;
        try {
            trace = route(g, s, d);
        } catch (const RouteError& e) {
            acc.violations.push_back(
                {"route_error", {s, d},
                 std::string(to_string(e.code())) + ": " + e.what()});
            continue;
        }
        acc.delivered += 1;
        acc.max_hops = std::max(acc.max_hops, trace.hops.size());
        if (!is_greedy_path(g, trace).ok()) {
            acc.violations.push_back(
                {"greedy_certificate", {s, d}, "no monotone rank coordinate"});
        }
        if (dist[d] <= 0) {
            acc.violations.push_back({"unreachable", {s, d}, ""});
        } else {
            acc.stretch_sum += static_cast<double>(trace.hops.size()) /
                               static_cast<double>(dist[d]);
            acc.stretch_pairs += 1;
        }
    }
    return acc;
}

} // namespace

SweepStats full_sweep(const Triangulation& g, const SweepOptions& opts) {
    const std::int64_t n = static_cast<std::int64_t>(g.size());
    const int threads = resolve_threads(opts.jobs);
    std::vector<SourceSweep> per_source(static_cast<std::size_t>(n));

#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t s = 0; s < n; ++s) {
        per_source[static_cast<std::size_t>(s)] =
            sweep_from(g, static_cast<NodeId>(s));
    }

    SweepStats stats;
    double stretch_sum = 0.0;
    std::size_t stretch_pairs = 0;
    for (const SourceSweep& acc : per_source) {
        stats.pairs_total += acc.pairs;
        stats.pairs_delivered += acc.delivered;
        stats.max_hops = std::max(stats.max_hops, acc.max_hops);
        stretch_sum += acc.stretch_sum;
        stretch_pairs += acc.stretch_pairs;
        stats.violations.insert(stats.violations.end(), acc.violations.begin(),
                                acc.violations.end());
    }
    stats.mean_stretch =
        stretch_pairs > 0 ? stretch_sum / static_cast<double>(stretch_pairs) : 0.0;
    return stats;
}

std::vector<Witness> check_propositions(const Triangulation& g,
                                        const PropositionCheckOptions& opts) {
    const std::size_t n = g.size();
    if (n > opts.max_nodes && !opts.force) {
        throw Error(ErrorCode::too_large,
                    "exhaustive triple scan on " + std::to_string(n) +
                        " nodes exceeds the cap of " + std::to_string(opts.max_nodes) +
                        "; set force to override");
    }
    const detail::SectorMatrix sec(g);
    const int threads = resolve_threads(opts.jobs);
    const std::int64_t nn = static_cast<std::int64_t>(n);
    std::vector<std::vector<Witness>> per_node(n);

#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t ai = 0; ai < nn; ++ai) {
        const NodeId a = static_cast<NodeId>(ai);
        auto& out = per_node[a];

        for (NodeId b = 0; b < n; ++b) {
            if (b == a) continue;
            const int jab = sec(a, b);
            if (jab == 0) continue;
            for (NodeId c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                if (sec(b, c) != jab) continue;
                if (sec(a, c) != jab) {
                    out.push_back({"sector_transitivity", {a, b, c}, ""});
                }
            }
        }

        for (NodeId v : g.adjacency[a]) {
            const int j = sec(a, v);
            if (j == 0 || j % 2 == 0) continue;
            for (NodeId d = 0; d < n; ++d) {
                if (d == a || d == v) continue;
                if (sec(a, d) != j) continue;
                if (detail::excluded_after_odd(j, sec(v, d))) {
                    out.push_back({"odd_sector_exclusion", {a, v, d}, ""});
                }
            }
        }

        for (NodeId d = 0; d < n; ++d) {
            if (d == a || g.adjacent(a, d)) continue;
            const int j = sec(a, d);
            if (j == 0 || j % 2 == 1) continue;
            const int before = (j + 4) % 6 + 1;
            const int after = j % 6 + 1;
            bool available = false;
            for (NodeId x : g.adjacency[a]) {
                const int jx = sec(a, x);
                if ((jx == before || jx == j || jx == after) && sec(x, d) == j) {
                    available = true;
                    break;
                }
            }
            if (!available) {
                out.push_back({"even_branch_availability", {a, d}, ""});
            }
        }
    }

    std::vector<Witness> violations;
    for (auto& chunk : per_node) {
        violations.insert(violations.end(), std::make_move_iterator(chunk.begin()),
                          std::make_move_iterator(chunk.end()));
    }
    detail::sort_witnesses(violations);
    return violations;
}

} // namespace trirank
