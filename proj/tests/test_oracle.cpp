#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "trirank/generator.hpp"
#include "trirank/oracle.hpp"

#include <algorithm>

using namespace trirank;
using namespace trirank::testfix;

namespace {

Triangulation path_graph() {
    // Not a triangulation; BFS only reads adjacency.
    std::vector<RankCoordinates> coords = {{1, 1, 1}, {2, 2, 2}, {3, 3, 3}};
    return build_triangulation(std::move(coords), {{0, 1}, {1, 2}}, {0, 1, 2});
}

/// Hand-built 5-node instance with provable check failures: with edge
/// (0,1), node 2 shares node 1's sector 1 of node 0 but lands in sector 3
/// of node 1, and node 4 sits in an even sector of node 0 with no usable
/// branch.
Triangulation bad_fixture() {
    std::vector<RankCoordinates> coords = {
        {2, 4, 4}, {4, 2, 3}, {3, 3, 1}, {5, 1, 2}, {1, 5, 5}};
    return build_triangulation(std::move(coords), {{0, 1}}, {2, 3, 4});
}

bool contains_witness(const std::vector<Witness>& ws, const std::string& rule,
                      const std::vector<NodeId>& nodes) {
    return std::any_of(ws.begin(), ws.end(), [&](const Witness& w) {
        return w.rule == rule && w.nodes == nodes;
    });
}

} // namespace

TEST_CASE("bfs distances on the 4-node instance") {
    const auto g = k4();
    CHECK(bfs_distance(g, kU, kA1) == 1);
    CHECK(bfs_distance(g, kA1, kA2) == 1);
    CHECK(bfs_distance(g, kU, kU) == 0);
}

TEST_CASE("bfs distance over a path graph") {
    const auto g = path_graph();
    CHECK(bfs_distance(g, 0, 2) == 2);
    CHECK(bfs_distance(g, 0, 1) == 1);
}

TEST_CASE("disconnected pairs are unreachable") {
    std::vector<RankCoordinates> coords = {{1, 1, 1}, {2, 2, 2}, {3, 3, 3}, {4, 4, 4}};
    const auto g = build_triangulation(std::move(coords), {{0, 1}, {2, 3}}, {0, 1, 2});
    CHECK_THROWS_AS((void)bfs_distance(g, 0, 3), Error);
    try {
        (void)bfs_distance(g, 0, 3);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::unreachable);
    }
    CHECK(bfs_distances(g, 0)[3] == -1);
}

TEST_CASE("full sweep of the 4-node instance") {
    const auto stats = full_sweep_serial(k4());
    CHECK(stats.pairs_total == 12);
    CHECK(stats.pairs_delivered == 12);
    CHECK(stats.max_hops == 1);
    CHECK(stats.mean_stretch == 1.0);
    CHECK(stats.violations.empty());
}

TEST_CASE("full sweep delivers everything on generated instances") {
    const auto g = generate({30, 42});
    const auto stats = full_sweep(g);
    CHECK(stats.pairs_total == 870);
    CHECK(stats.pairs_delivered == 870);
    CHECK(stats.violations.empty());
    CHECK(stats.max_hops < 30);
    CHECK(stats.mean_stretch >= 1.0);
}

TEST_CASE("full sweep on a larger instance") {
    const auto g = generate({200, 7});
    const auto stats = full_sweep(g);
    CHECK(stats.pairs_total == 39800);
    CHECK(stats.pairs_delivered == 39800);
    CHECK(stats.violations.empty());
    CHECK(stats.max_hops < 200);
}

TEST_CASE("greedy hop counts never beat BFS") {
    const auto g = generate({30, 4});
    for (NodeId s = 0; s < g.size(); ++s) {
        const auto dist = bfs_distances(g, s);
        for (NodeId d = 0; d < g.size(); ++d) {
            if (s == d) continue;
            const auto trace = route(g, s, d);
            CHECK(trace.hops.size() >= static_cast<std::size_t>(dist[d]));
        }
    }
}

TEST_CASE("proposition checks are clean on valid instances") {
    CHECK(check_propositions_serial(k4()).empty());
    const auto g = generate({50, 3});
    CHECK(check_propositions(g).empty());
}

TEST_CASE("proposition checks expose a broken instance") {
    const auto g = bad_fixture();
    const auto violations = check_propositions_serial(g);
    CHECK(!violations.empty());
    CHECK(contains_witness(violations, "odd_sector_exclusion", {0, 1, 2}));
    CHECK(contains_witness(violations, "even_branch_availability", {0, 4}));
    // Canonical order.
    CHECK(std::is_sorted(violations.begin(), violations.end(),
                         [](const Witness& a, const Witness& b) {
                             if (a.rule != b.rule) return a.rule < b.rule;
                             return a.nodes < b.nodes;
                         }));
}

TEST_CASE("sector transitivity cannot fail on genuine rank orders") {
    // Transitivity of integer comparison makes equal-sector chains close;
    // even mutated rank tables keep this, so a clean scan is expected on
    // arbitrary permutations.
    auto g = generate({25, 6});
    std::swap(g.coords[5].rank2, g.coords[9].rank2);
    const auto violations = check_propositions_serial(g);
    CHECK(!contains_witness(violations, "sector_transitivity", {}));
    for (const auto& w : violations) CHECK(w.rule != "sector_transitivity");
}

TEST_CASE("the cubic scan is gated by size") {
    const auto g = generate({210, 2});
    CHECK_THROWS_AS((void)check_propositions(g), Error);
    try {
        (void)check_propositions(g);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::too_large);
    }
    PropositionCheckOptions opts;
    opts.force = true;
    CHECK(check_propositions(g, opts).empty());
}
