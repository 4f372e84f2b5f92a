#include "trirank/router.hpp"

#include <stdexcept>
#include <string>

namespace trirank {

std::vector<NodeId> RouteTrace::node_sequence() const {
    std::vector<NodeId> seq;
    seq.reserve(hops.size() + 1);
    seq.push_back(source);
    for (const Hop& h : hops) seq.push_back(h.node);
    return seq;
}

LocalView local_view(const Triangulation& g, NodeId u) {
    LocalView view;
    view.id = u;
    view.coords = g.coords.at(u);
    view.internal = g.is_internal(u);
    const auto& adj = neighbors(g, u);
    view.neighbors.reserve(adj.size());
    for (NodeId v : adj) view.neighbors.push_back({v, g.coords[v]});
    return view;
}

NextHop next_hop(const Triangulation& g, NodeId u, NodeId dest) {
    if (u >= g.size() || dest >= g.size()) {
        throw Error(ErrorCode::unknown_node,
                    "hop endpoints " + std::to_string(u) + ", " + std::to_string(dest) +
                        " must lie in [0, " + std::to_string(g.size()) + ")");
    }
    assert(u != dest);
    return next_hop_local(local_view(g, u), dest, g.coords[dest]);
}

RouteTrace route(const Triangulation& g, NodeId source, NodeId dest) {
    if (source >= g.size() || dest >= g.size()) {
        throw Error(ErrorCode::unknown_node,
                    "route endpoints " + std::to_string(source) + ", " +
                        std::to_string(dest) + " must lie in [0, " +
                        std::to_string(g.size()) + ")");
    }

    RouteTrace trace;
    trace.source = source;
    trace.destination = dest;
    if (source == dest) {
        trace.delivered = true;
        return trace;
    }

    NodeId current = source;
    const std::size_t hop_cap = g.size();
    while (trace.hops.size() < hop_cap) {
        NextHop nh;
        try {
            nh = next_hop(g, current, dest);
        } catch (const Error& e) {
            throw RouteError(e.code(), e.what(), std::move(trace));
        }
        trace.hops.push_back({nh.node, nh.decision});
        current = nh.node;
        if (current == dest) {
            trace.delivered = true;
            return trace;
        }
    }
    throw RouteError(ErrorCode::hop_limit_exceeded,
                     "no delivery from " + std::to_string(source) + " to " +
                         std::to_string(dest) + " within " +
                         std::to_string(hop_cap) + " hops",
                     std::move(trace));
}

CertificateResult is_greedy_path(const Triangulation& g, const RouteTrace& trace) {
    const std::vector<NodeId> seq = trace.node_sequence();
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        if (!g.adjacent(seq[k], seq[k + 1])) {
            throw std::invalid_argument("trace nodes " + std::to_string(seq[k]) +
                                        " and " + std::to_string(seq[k + 1]) +
                                        " are not adjacent");
        }
    }

    CertificateResult result;
    if (seq.size() <= 1) {
        result.certificate = GreedyCertificate{1, true}; // vacuously monotone
        return result;
    }

    for (int order = 1; order <= 3; ++order) {
        const bool increasing =
            g.coords[seq[1]].rank(order) > g.coords[seq[0]].rank(order);
        std::size_t violation = seq.size(); // sentinel: none
        for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
            const Rank a = g.coords[seq[k]].rank(order);
            const Rank b = g.coords[seq[k + 1]].rank(order);
            if ((increasing && b <= a) || (!increasing && b >= a)) {
                violation = k;
                break;
            }
        }
        if (violation == seq.size()) {
            if (!result.certificate) {
                result.certificate = GreedyCertificate{order, increasing};
            }
        } else {
            result.first_violations.emplace_back(order, violation);
        }
    }
    if (result.certificate) result.first_violations.clear();
    return result;
}

} // namespace trirank
