#pragma once

#include "trirank/local_router.hpp"
#include "trirank/triangulation.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace trirank {

struct Hop {
    NodeId node = 0;
    HopDecision decision;

    bool operator==(const Hop&) const = default;
};

/// The hop list excludes the source; `delivered` holds exactly when the
/// last hop node is the destination. A source routed to itself yields an
/// empty, delivered trace.
struct RouteTrace {
    NodeId source = 0;
    NodeId destination = 0;
    std::vector<Hop> hops;
    bool delivered = false;

    /// [source, hop nodes...]
    std::vector<NodeId> node_sequence() const;

    bool operator==(const RouteTrace&) const = default;
};

/// Router failure carrying the partial trace walked so far.
class RouteError : public Error {
public:
    RouteError(ErrorCode code, const std::string& message, RouteTrace partial)
        : Error(code, message), partial_(std::move(partial)) {}

    const RouteTrace& partial_trace() const { return partial_; }

private:
    RouteTrace partial_;
};

/// The 1-hop information a node would hold about itself.
LocalView local_view(const Triangulation& g, NodeId u);

/// One forwarding step; builds the local view of u and delegates to
/// next_hop_local, which is the only decision path.
NextHop next_hop(const Triangulation& g, NodeId u, NodeId dest);

/// Iterates next_hop until the destination is reached. Hops are capped at
/// n; exceeding the cap means a rank coordinate failed to be monotone,
/// which cannot happen on a valid instance, and raises
/// RouteError(hop_limit_exceeded). Other routing errors are rethrown as
/// RouteError with the partial trace attached.
RouteTrace route(const Triangulation& g, NodeId source, NodeId dest);

struct GreedyCertificate {
    int order = 0;           // 1..3
    bool increasing = false; // direction of the monotone coordinate

    bool operator==(const GreedyCertificate&) const = default;
};

struct CertificateResult {
    std::optional<GreedyCertificate> certificate;
    /// When no certificate exists: per order, the first hop index at which
    /// monotonicity (in the direction set by the first hop) breaks.
    std::vector<std::pair<int, std::size_t>> first_violations;

    bool ok() const { return certificate.has_value(); }
};

/// Certifies that some rank coordinate changes strictly monotonically along
/// the whole trace. Several coordinates may qualify; the smallest order
/// index is reported. Traces of fewer than two nodes certify vacuously as
/// (order 1, increasing). Requires consecutive trace nodes to be adjacent
/// in g.
CertificateResult is_greedy_path(const Triangulation& g, const RouteTrace& trace);

} // namespace trirank
