// OpenMP variants of the exhaustive condition scans. Both run a counting
// pass in parallel and then re-extract the first witnesses serially in scan
// order, so the report is identical to the serial reference for any thread
// count.

#include "trirank/schnyder.hpp"

#include <cstdint>
#include <numeric>
#include <string>

namespace trirank {

ValidationReport validate_condition_a(std::span<const RankCoordinates> coords,
                                      const ValidationOptions& opts) {
    const std::int64_t n = static_cast<std::int64_t>(coords.size());
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);

#pragma omp parallel for schedule(static)
    for (std::int64_t x = 0; x < n; ++x) {
        std::uint64_t c = 0;
        for (std::int64_t z = 0; z < n; ++z) {
            if (x == z) continue;
            if (detail::dominated(coords[static_cast<std::size_t>(x)],
                                  coords[static_cast<std::size_t>(z)])) {
                ++c;
            }
        }
        counts[static_cast<std::size_t>(x)] = c;
    }

    ValidationReport report;
    report.total_violations =
        std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    report.condition_a_ok = report.total_violations == 0;

    for (std::int64_t x = 0; x < n && report.witnesses.size() < opts.witness_cap; ++x) {
        if (counts[static_cast<std::size_t>(x)] == 0) continue;
        for (std::int64_t z = 0; z < n && report.witnesses.size() < opts.witness_cap; ++z) {
            if (x == z) continue;
            if (detail::dominated(coords[static_cast<std::size_t>(x)],
                                  coords[static_cast<std::size_t>(z)])) {
                report.witnesses.push_back(
                    {"condition_a",
                     {static_cast<NodeId>(x), static_cast<NodeId>(z)},
                     "first node ranked below second in all three orders"});
            }
        }
    }
    return report;
}

ValidationReport validate_condition_b(std::span<const RankCoordinates> coords,
                                      std::span<const Edge> edges,
                                      const ValidationOptions& opts) {
    const std::int64_t m = static_cast<std::int64_t>(edges.size());
    const std::size_t n = coords.size();
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(m), 0);

#pragma omp parallel for schedule(static)
    for (std::int64_t e = 0; e < m; ++e) {
        const auto& [x, y] = edges[static_cast<std::size_t>(e)];
        std::uint64_t c = 0;
        for (std::size_t z = 0; z < n; ++z) {
            if (z == x || z == y) continue;
            if (!detail::edge_condition_holds(coords[x], coords[y], coords[z])) ++c;
        }
        counts[static_cast<std::size_t>(e)] = c;
    }

    ValidationReport report;
    report.total_violations =
        std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    report.condition_b_ok = report.total_violations == 0;

    for (std::int64_t e = 0; e < m && report.witnesses.size() < opts.witness_cap; ++e) {
        if (counts[static_cast<std::size_t>(e)] == 0) continue;
        const auto& [x, y] = edges[static_cast<std::size_t>(e)];
        for (std::size_t z = 0; z < n && report.witnesses.size() < opts.witness_cap; ++z) {
            if (z == x || z == y) continue;
            if (!detail::edge_condition_holds(coords[x], coords[y], coords[z])) {
                report.witnesses.push_back(
                    {"condition_b",
                     {x, y, static_cast<NodeId>(z)},
                     "no order ranks both edge endpoints below the third node"});
            }
        }
    }
    return report;
}

} // namespace trirank
