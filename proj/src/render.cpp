#include "trirank/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace trirank {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 48.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::vector<Point> layout_positions(const Triangulation& g) {
    if (!g.positions.empty()) return g.positions;
    // Barycentric fallback: weight the triangle corner of each order by the
    // node's normalized rank, so a node ranked high in order i sits near
    // corner i, matching where the geometric generator would put it.
    const Point t1{0.0, 0.0};
    const Point t2{1.0, 0.0};
    const Point t3{0.5, std::sqrt(3.0) * 0.5};
    std::vector<Point> pos(g.size());
    for (NodeId u = 0; u < g.size(); ++u) {
        const RankCoordinates& c = g.coords[u];
        const double sum = static_cast<double>(c.rank1) + c.rank2 + c.rank3;
        const double b1 = c.rank1 / sum;
        const double b2 = c.rank2 / sum;
        const double b3 = c.rank3 / sum;
        pos[u] = {b1 * t1.x + b2 * t2.x + b3 * t3.x,
                  b1 * t1.y + b2 * t2.y + b3 * t3.y};
    }
    return pos;
}

} // namespace

std::string render_svg(const Triangulation& g, const RouteTrace* route) {
    const std::vector<Point> raw = layout_positions(g);

    double min_x = std::numeric_limits<double>::max();
    double min_y = std::numeric_limits<double>::max();
    double max_x = std::numeric_limits<double>::lowest();
    double max_y = std::numeric_limits<double>::lowest();
    for (const Point& p : raw) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
    const double scale = (kCanvas - 2.0 * kMargin) / span;
    const double width = (max_x - min_x) * scale + 2.0 * kMargin;
    const double height = (max_y - min_y) * scale + 2.0 * kMargin;
    auto to_canvas = [&](const Point& p) -> Point {
        // SVG y grows downward.
        return {kMargin + (p.x - min_x) * scale,
                height - (kMargin + (p.y - min_y) * scale)};
    };
    std::vector<Point> pos(g.size());
    for (NodeId u = 0; u < g.size(); ++u) pos[u] = to_canvas(raw[u]);

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << num(width) << "\" height=\"" << num(height) << "\" viewBox=\"0 0 "
        << num(width) << " " << num(height) << "\">\n"
        << "  <defs>\n"
        << "    <marker id=\"hop\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\""
        << " refY=\"3\" orient=\"auto\" markerUnits=\"strokeWidth\">\n"
        << "      <path d=\"M0,0 L7,3 L0,6 z\" fill=\"#d4442c\"/>\n"
        << "    </marker>\n"
        << "  </defs>\n";

    svg << "  <g stroke=\"#9aa3ab\" stroke-width=\"1\">\n";
    for (const auto& [a, b] : edge_list(g)) {
        svg << "    <line x1=\"" << num(pos[a].x) << "\" y1=\"" << num(pos[a].y)
            << "\" x2=\"" << num(pos[b].x) << "\" y2=\"" << num(pos[b].y) << "\"/>\n";
    }
    svg << "  </g>\n";

    if (route != nullptr && !route->hops.empty()) {
        const std::vector<NodeId> seq = route->node_sequence();
        svg << "  <polyline fill=\"none\" stroke=\"#d4442c\" stroke-width=\"2.5\""
            << " marker-mid=\"url(#hop)\" marker-end=\"url(#hop)\" points=\"";
        for (std::size_t k = 0; k < seq.size(); ++k) {
            if (k > 0) svg << " ";
            svg << num(pos[seq[k]].x) << "," << num(pos[seq[k]].y);
        }
        svg << "\"/>\n";
    }

    svg << "  <g stroke=\"#30343a\" stroke-width=\"1\">\n";
    for (NodeId u = 0; u < g.size(); ++u) {
        const bool anchor = g.is_anchor(u);
        svg << "    <circle cx=\"" << num(pos[u].x) << "\" cy=\"" << num(pos[u].y)
            << "\" r=\"" << (anchor ? "7" : "3.5") << "\" fill=\""
            << (anchor ? "#2c6fd4" : "#e8ecef") << "\">"
            << "<title>" << u << "</title></circle>\n";
    }
    svg << "  </g>\n";

    for (int i = 0; i < 3; ++i) {
        const NodeId a = g.anchors[static_cast<std::size_t>(i)];
        svg << "  <text x=\"" << num(pos[a].x + 10.0) << "\" y=\""
            << num(pos[a].y - 10.0)
            << "\" font-family=\"sans-serif\" font-size=\"16\" fill=\"#2c6fd4\">A"
            << (i + 1) << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace trirank
