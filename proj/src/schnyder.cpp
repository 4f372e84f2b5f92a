#include "trirank/schnyder.hpp"

#include <algorithm>
#include <string>

namespace trirank {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::equal_ranks: return "EqualRanks";
    case ErrorCode::dominance: return "Dominance";
    case ErrorCode::unknown_node: return "UnknownNode";
    case ErrorCode::multiple_odd_neighbors: return "MultipleOddNeighbors";
    case ErrorCode::missing_odd_neighbor: return "MissingOddNeighbor";
    case ErrorCode::stuck: return "Stuck";
    case ErrorCode::hop_limit_exceeded: return "HopLimitExceeded";
    case ErrorCode::unreachable: return "Unreachable";
    case ErrorCode::degenerate_input: return "DegenerateInput";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::io_error: return "IoError";
    }
    return "UnknownError";
}

const char* to_string(Sector s) {
    switch (s) {
    case Sector::s1: return "S1";
    case Sector::s2: return "S2";
    case Sector::s3: return "S3";
    case Sector::s4: return "S4";
    case Sector::s5: return "S5";
    case Sector::s6: return "S6";
    }
    return "S?";
}

Ordering compare(const RankCoordinates& u, const RankCoordinates& v, int order) {
    const Rank ru = u.rank(order);
    const Rank rv = v.rank(order);
    if (ru == rv) {
        throw Error(ErrorCode::equal_ranks,
                    "equal rank " + std::to_string(ru) + " in order " +
                        std::to_string(order) + ": coordinate bijection broken");
    }
    return ru < rv ? Ordering::less : Ordering::greater;
}

namespace {

// bit i-1 set  <=>  u <_i v.  Six of the eight patterns name a sector;
// 000 and 111 are triple dominations.
constexpr Sector kSectorByBits[8] = {
    Sector::s1, // 0b000: unused, guarded
    Sector::s1, // 0b001
    Sector::s3, // 0b010
    Sector::s2, // 0b011
    Sector::s5, // 0b100
    Sector::s6, // 0b101
    Sector::s4, // 0b110
    Sector::s1, // 0b111: unused, guarded
};

inline int comparison_bits(const RankCoordinates& u, const RankCoordinates& v) {
    int bits = 0;
    if (u.rank1 < v.rank1) bits |= 1;
    if (u.rank2 < v.rank2) bits |= 2;
    if (u.rank3 < v.rank3) bits |= 4;
    return bits;
}

} // namespace

Sector sector_of(const RankCoordinates& u, const RankCoordinates& v) {
    for (int i = 1; i <= 3; ++i) {
        (void)compare(u, v, i); // throws on equal ranks
    }
    const int bits = comparison_bits(u, v);
    if (bits == 0 || bits == 7) {
        throw Error(ErrorCode::dominance,
                    bits == 7 ? "node dominated in all three orders (u below v)"
                              : "node dominated in all three orders (v below u)");
    }
    return kSectorByBits[bits];
}

std::optional<Sector> try_sector_of(const RankCoordinates& u,
                                    const RankCoordinates& v) noexcept {
    if (u.rank1 == v.rank1 || u.rank2 == v.rank2 || u.rank3 == v.rank3) {
        return std::nullopt;
    }
    const int bits = comparison_bits(u, v);
    if (bits == 0 || bits == 7) return std::nullopt;
    return kSectorByBits[bits];
}

void ValidationReport::merge(ValidationReport other) {
    condition_a_ok = condition_a_ok && other.condition_a_ok;
    condition_b_ok = condition_b_ok && other.condition_b_ok;
    standard_ok = standard_ok && other.standard_ok;
    structure_ok = structure_ok && other.structure_ok;
    witnesses.insert(witnesses.end(),
                     std::make_move_iterator(other.witnesses.begin()),
                     std::make_move_iterator(other.witnesses.end()));
    total_violations += other.total_violations;
}

ValidationReport validate_condition_a_serial(std::span<const RankCoordinates> coords,
                                             const ValidationOptions& opts) {
    const std::size_t n = coords.size();
    ValidationReport report;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t z = 0; z < n; ++z) {
            if (x == z) continue;
            if (detail::dominated(coords[x], coords[z])) {
                report.total_violations += 1;
                if (report.witnesses.size() < opts.witness_cap) {
                    report.witnesses.push_back(
                        {"condition_a",
                         {static_cast<NodeId>(x), static_cast<NodeId>(z)},
                         "first node ranked below second in all three orders"});
                }
            }
        }
    }
    report.condition_a_ok = report.total_violations == 0;
    return report;
}

ValidationReport validate_condition_b_serial(std::span<const RankCoordinates> coords,
                                             std::span<const Edge> edges,
                                             const ValidationOptions& opts) {
    const std::size_t n = coords.size();
    ValidationReport report;
    for (const auto& [x, y] : edges) {
        for (std::size_t z = 0; z < n; ++z) {
            if (z == x || z == y) continue;
            if (!detail::edge_condition_holds(coords[x], coords[y], coords[z])) {
                report.total_violations += 1;
                if (report.witnesses.size() < opts.witness_cap) {
                    report.witnesses.push_back(
                        {"condition_b",
                         {x, y, static_cast<NodeId>(z)},
                         "no order ranks both edge endpoints below the third node"});
                }
            }
        }
    }
    report.condition_b_ok = report.total_violations == 0;
    return report;
}

ValidationReport validate_standard(std::span<const RankCoordinates> coords,
                                   const std::array<NodeId, 3>& anchors,
                                   const ValidationOptions& opts) {
    const Rank n = static_cast<Rank>(coords.size());
    ValidationReport report;
    auto add = [&](NodeId node, std::string detail) {
        report.total_violations += 1;
        if (report.witnesses.size() < opts.witness_cap) {
            report.witnesses.push_back({"standard", {node}, std::move(detail)});
        }
    };
    for (int i = 1; i <= 3; ++i) {
        const NodeId own = anchors[static_cast<std::size_t>(i - 1)];
        const NodeId other1 = anchors[static_cast<std::size_t>(i % 3)];
        const NodeId other2 = anchors[static_cast<std::size_t>((i + 1) % 3)];
        if (coords[own].rank(i) != n) {
            add(own, "anchor not maximal in order " + std::to_string(i));
        }
        const Rank a = coords[other1].rank(i);
        const Rank b = coords[other2].rank(i);
        if (std::min(a, b) != 1 || std::max(a, b) != 2) {
            add(a > b ? other1 : other2,
                "non-own anchors do not hold ranks {1,2} of order " + std::to_string(i));
        }
    }
    report.standard_ok = report.total_violations == 0;
    return report;
}

} // namespace trirank
