#include "trirank/triangulation.hpp"

#include <algorithm>
#include <string>

namespace trirank {

bool Triangulation::adjacent(NodeId u, NodeId v) const {
    if (u >= size() || v >= size()) return false;
    const auto& adj = adjacency[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

Triangulation build_triangulation(std::vector<RankCoordinates> coords,
                                  std::vector<Edge> edges,
                                  std::array<NodeId, 3> anchors,
                                  std::vector<Point> positions) {
    const std::size_t n = coords.size();
    auto fail = [](const std::string& what) -> void {
        throw Error(ErrorCode::parse_error, what);
    };

    if (n == 0) fail("graph has no nodes");
    for (NodeId a : anchors) {
        if (a >= n) fail("anchor id " + std::to_string(a) + " out of range");
    }
    if (anchors[0] == anchors[1] || anchors[0] == anchors[2] ||
        anchors[1] == anchors[2]) {
        fail("anchors are not three distinct nodes");
    }
    if (!positions.empty() && positions.size() != n) {
        fail("positions present for some nodes but not all");
    }

    for (auto& [a, b] : edges) {
        if (a >= n || b >= n) fail("edge endpoint out of range");
        if (a == b) fail("self-loop edge at node " + std::to_string(a));
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        fail("duplicate edge");
    }

    Triangulation g;
    g.coords = std::move(coords);
    g.anchors = anchors;
    g.positions = std::move(positions);
    g.adjacency.assign(n, {});
    for (const auto& [a, b] : edges) {
        g.adjacency[a].push_back(b);
        g.adjacency[b].push_back(a);
    }
    for (auto& adj : g.adjacency) {
        std::sort(adj.begin(), adj.end());
    }
    return g;
}

const std::vector<NodeId>& neighbors(const Triangulation& g, NodeId u) {
    if (u >= g.size()) {
        throw Error(ErrorCode::unknown_node,
                    "node " + std::to_string(u) + " not in graph of size " +
                        std::to_string(g.size()));
    }
    return g.adjacency[u];
}

std::optional<NodeId> odd_sector_neighbor(const Triangulation& g, NodeId u, Sector j) {
    assert(is_odd_sector(j));
    std::optional<NodeId> found;
    for (NodeId v : neighbors(g, u)) {
        if (try_sector_of(g.coords[u], g.coords[v]) != j) continue;
        if (found) {
            throw Error(ErrorCode::multiple_odd_neighbors,
                        "node " + std::to_string(u) + " has neighbors " +
                            std::to_string(*found) + " and " + std::to_string(v) +
                            " both in sector " + to_string(j));
        }
        found = v;
    }
    return found;
}

std::vector<NodeId> even_sector_neighbors(const Triangulation& g, NodeId u, Sector j) {
    assert(!is_odd_sector(j));
    std::vector<NodeId> out;
    for (NodeId v : neighbors(g, u)) {
        if (try_sector_of(g.coords[u], g.coords[v]) == j) out.push_back(v);
    }
    return out; // adjacency is sorted, so this is ascending by id
}

std::vector<Edge> edge_list(const Triangulation& g) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < g.size(); ++u) {
        for (NodeId v : g.adjacency[u]) {
            if (u < v) edges.emplace_back(u, v);
        }
    }
    return edges;
}

namespace {

// Per-coordinate bijectivity. Condition a/b scans assume it, so a broken
// bijection short-circuits the rest of the report.
ValidationReport check_rank_bijection(const Triangulation& g,
                                      const ValidationOptions& opts) {
    ValidationReport report;
    const std::size_t n = g.size();
    for (int order = 1; order <= 3; ++order) {
        std::vector<NodeId> holder(n + 1, static_cast<NodeId>(-1));
        for (NodeId u = 0; u < n; ++u) {
            const Rank r = g.coords[u].rank(order);
            if (r < 1 || static_cast<std::size_t>(r) > n) {
                report.total_violations += 1;
                if (report.witnesses.size() < opts.witness_cap) {
                    report.witnesses.push_back(
                        {"rank_bijection", {u},
                         "rank " + std::to_string(r) + " of order " +
                             std::to_string(order) + " outside [1, n]"});
                }
                continue;
            }
            if (holder[static_cast<std::size_t>(r)] != static_cast<NodeId>(-1)) {
                report.total_violations += 1;
                if (report.witnesses.size() < opts.witness_cap) {
                    report.witnesses.push_back(
                        {"rank_bijection",
                         {holder[static_cast<std::size_t>(r)], u},
                         "shared rank " + std::to_string(r) + " in order " +
                             std::to_string(order)});
                }
            } else {
                holder[static_cast<std::size_t>(r)] = u;
            }
        }
    }
    report.structure_ok = report.total_violations == 0;
    return report;
}

ValidationReport check_adjacency_shape(const Triangulation& g,
                                       const ValidationOptions& opts) {
    ValidationReport report;
    auto add = [&](const char* rule, std::vector<NodeId> nodes, std::string detail) {
        report.total_violations += 1;
        if (report.witnesses.size() < opts.witness_cap) {
            report.witnesses.push_back({rule, std::move(nodes), std::move(detail)});
        }
    };
    for (NodeId u = 0; u < g.size(); ++u) {
        for (NodeId v : g.adjacency[u]) {
            if (v >= g.size()) {
                add("adjacency_symmetry", {u, v}, "neighbor id out of range");
                continue;
            }
            if (v == u) add("adjacency_symmetry", {u}, "self-loop");
            if (!g.adjacent(v, u)) {
                add("adjacency_symmetry", {u, v}, "edge recorded in one direction only");
            }
        }
    }
    const auto& a = g.anchors;
    for (int i = 0; i < 3; ++i) {
        const NodeId x = a[static_cast<std::size_t>(i)];
        const NodeId y = a[static_cast<std::size_t>((i + 1) % 3)];
        if (!g.adjacent(x, y)) {
            add("anchor_adjacency", {x, y}, "anchors not mutually adjacent");
        }
    }
    report.structure_ok = report.total_violations == 0;
    return report;
}

ValidationReport check_odd_sectors(const Triangulation& g,
                                   const ValidationOptions& opts) {
    ValidationReport report;
    auto add = [&](const char* rule, std::vector<NodeId> nodes, std::string detail) {
        report.total_violations += 1;
        if (report.witnesses.size() < opts.witness_cap) {
            report.witnesses.push_back({rule, std::move(nodes), std::move(detail)});
        }
    };
    for (NodeId u = 0; u < g.size(); ++u) {
        for (int i = 1; i <= 3; ++i) {
            const Sector j = odd_sector_for_order(i);
            NodeId first = static_cast<NodeId>(-1);
            std::size_t count = 0;
            for (NodeId v : g.adjacency[u]) {
                if (try_sector_of(g.coords[u], g.coords[v]) != j) continue;
                if (count == 0) first = v;
                if (count == 1) {
                    add("odd_sector_uniqueness", {u, first, v},
                        std::string("two neighbors in sector ") + to_string(j));
                }
                ++count;
            }
            if (count == 0 && g.is_internal(u)) {
                add("odd_sector_existence", {u},
                    std::string("internal node has no neighbor in sector ") +
                        to_string(j));
            }
        }
    }
    report.structure_ok = report.total_violations == 0;
    return report;
}

} // namespace

ValidationReport validate_structure(const Triangulation& g,
                                    const ValidationOptions& opts) {
    ValidationReport report = check_rank_bijection(g, opts);
    if (!report.structure_ok) {
        // Rank comparisons are meaningless below; report what is certain.
        return report;
    }
    report.merge(check_adjacency_shape(g, opts));
    report.merge(check_odd_sectors(g, opts));
    report.merge(validate_condition_a(g.coords, opts));
    const auto edges = edge_list(g);
    report.merge(validate_condition_b(g.coords, edges, opts));
    report.merge(validate_standard(g.coords, g.anchors, opts));
    return report;
}

} // namespace trirank
