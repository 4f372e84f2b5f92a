#pragma once

#include "trirank/schnyder.hpp"

#include <array>
#include <optional>
#include <vector>

namespace trirank {

/// A graph instance: rank coordinates per node, sorted adjacency lists,
/// and the three distinguished external nodes (anchors). Planar positions
/// are carried only when the instance was generated geometrically and are
/// used for rendering alone. Immutable after construction; every operation
/// on it is a pure read.
struct Triangulation {
    std::vector<RankCoordinates> coords;
    std::vector<std::vector<NodeId>> adjacency;
    std::array<NodeId, 3> anchors{0, 1, 2};
    std::vector<Point> positions; // empty unless generated geometrically

    std::size_t size() const { return coords.size(); }

    bool is_anchor(NodeId u) const {
        return u == anchors[0] || u == anchors[1] || u == anchors[2];
    }
    bool is_internal(NodeId u) const { return !is_anchor(u); }

    bool adjacent(NodeId u, NodeId v) const;
};

/// Assembles a Triangulation from parts, normalizing edges to (low, high)
/// and building sorted symmetric adjacency. Rejects out-of-range ids,
/// self-loops, duplicate edges, and malformed anchors/positions with
/// Error(parse_error).
Triangulation build_triangulation(std::vector<RankCoordinates> coords,
                                  std::vector<Edge> edges,
                                  std::array<NodeId, 3> anchors,
                                  std::vector<Point> positions = {});

/// Sorted adjacency list of u. Throws Error(unknown_node).
const std::vector<NodeId>& neighbors(const Triangulation& g, NodeId u);

/// The unique neighbor of u lying in odd sector j, if any. External nodes
/// may legitimately have none; two neighbors in one odd sector mean the
/// instance is broken and raise Error(multiple_odd_neighbors).
std::optional<NodeId> odd_sector_neighbor(const Triangulation& g, NodeId u, Sector j);

/// All neighbors of u lying in even sector j, ascending by id.
std::vector<NodeId> even_sector_neighbors(const Triangulation& g, NodeId u, Sector j);

/// Canonical undirected edge list: (low, high) pairs, lexicographically
/// ascending.
std::vector<Edge> edge_list(const Triangulation& g);

/// Full structural validation: per-coordinate rank bijectivity, adjacency
/// symmetry/irreflexivity, anchor mutual adjacency, odd-sector uniqueness
/// (every node) and existence (internal nodes), plus the delegated
/// condition a / condition b / standardness checks, aggregated into one
/// report.
ValidationReport validate_structure(const Triangulation& g,
                                    const ValidationOptions& opts = {});

} // namespace trirank
