#include "trirank/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace trirank {

namespace {

inline double dist2(const Point& p, const Point& q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return dx * dx + dy * dy;
}

// Uniform double in [0,1) from the top 53 bits of the engine output.
// std::uniform_real_distribution is not pinned across standard library
// implementations; this mapping is.
inline double u53(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

std::array<Point, 3> anchor_positions(double side) {
    return {Point{0.0, 0.0}, Point{side, 0.0},
            Point{side * 0.5, side * std::sqrt(3.0) * 0.5}};
}

std::vector<RankCoordinates> orders_from_points(std::span<const Point> interior,
                                                const std::array<Point, 3>& anchors) {
    const std::size_t n = interior.size() + 3;
    std::vector<Point> pts;
    pts.reserve(n);
    pts.insert(pts.end(), anchors.begin(), anchors.end());
    pts.insert(pts.end(), interior.begin(), interior.end());

    std::vector<RankCoordinates> coords(n);
    std::vector<NodeId> order(n);
    std::vector<double> d2(n);
    for (int i = 1; i <= 3; ++i) {
        const Point& a = anchors[static_cast<std::size_t>(i - 1)];
        for (std::size_t u = 0; u < n; ++u) d2[u] = dist2(pts[u], a);
        std::iota(order.begin(), order.end(), NodeId{0});
        std::sort(order.begin(), order.end(), [&](NodeId u, NodeId v) {
            if (d2[u] != d2[v]) return d2[u] > d2[v]; // farther first
            return u < v;
        });
        for (std::size_t pos = 0; pos < n; ++pos) {
            const Rank r = static_cast<Rank>(pos + 1);
            RankCoordinates& c = coords[order[pos]];
            if (i == 1) c.rank1 = r;
            else if (i == 2) c.rank2 = r;
            else c.rank3 = r;
        }
    }
    return coords;
}

Triangulation generate(const GeneratorConfig& cfg) {
    if (cfg.n < 4) {
        throw Error(ErrorCode::degenerate_input,
                    "need at least 4 nodes (three anchors plus one interior), got " +
                        std::to_string(cfg.n));
    }
    if (!(cfg.triangle_side > 0.0) || !std::isfinite(cfg.triangle_side)) {
        throw Error(ErrorCode::degenerate_input, "triangle side must be positive");
    }

    const auto anchors = anchor_positions(cfg.triangle_side);
    const Point& a1 = anchors[0];
    const Point& a2 = anchors[1];
    const Point& a3 = anchors[2];

    std::mt19937_64 rng(cfg.seed);
    std::vector<Point> interior;
    interior.reserve(cfg.n - 3);
    for (std::uint32_t k = 0; k + 3 < cfg.n; ++k) {
        double a = 0.0, b = 0.0;
        do {
            a = u53(rng);
            b = u53(rng);
            if (a + b > 1.0) { // fold into the lower triangle
                a = 1.0 - a;
                b = 1.0 - b;
            }
        } while (!(a > 0.0 && b > 0.0 && a + b < 1.0)); // open triangle only
        interior.push_back({a1.x + a * (a2.x - a1.x) + b * (a3.x - a1.x),
                            a1.y + a * (a2.y - a1.y) + b * (a3.y - a1.y)});
    }

    auto coords = orders_from_points(interior, anchors);
    const std::size_t n = coords.size();

    // One edge per node and nonempty odd sector, to the sector's
    // rank-minimal element. Anchors with empty sectors contribute nothing;
    // the anchor triangle is added explicitly.
    std::vector<Edge> edges;
    edges.reserve(3 * n);
    for (NodeId v = 0; v < n; ++v) {
        for (int i = 1; i <= 3; ++i) {
            const Sector j = odd_sector_for_order(i);
            NodeId best = static_cast<NodeId>(-1);
            Rank best_rank = std::numeric_limits<Rank>::max();
            for (NodeId z = 0; z < n; ++z) {
                if (z == v) continue;
                if (try_sector_of(coords[v], coords[z]) != j) continue;
                const Rank r = coords[z].rank(i);
                if (r < best_rank) {
                    best_rank = r;
                    best = z;
                }
            }
            if (best != static_cast<NodeId>(-1)) {
                edges.emplace_back(std::min(v, best), std::max(v, best));
            }
        }
    }
    edges.emplace_back(0, 1);
    edges.emplace_back(0, 2);
    edges.emplace_back(1, 2);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<Point> positions;
    positions.reserve(n);
    positions.insert(positions.end(), anchors.begin(), anchors.end());
    positions.insert(positions.end(), interior.begin(), interior.end());

    return build_triangulation(std::move(coords), std::move(edges), {0, 1, 2},
                               std::move(positions));
}

} // namespace trirank
