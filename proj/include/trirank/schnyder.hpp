#pragma once

#include "trirank/types.hpp"

#include <array>
#include <cassert>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace trirank {

/// A node's position in each of the three total orders. Within one
/// instance of n nodes, every coordinate is a bijection onto {1..n}:
/// the smallest element of order i has rank 1, the largest rank n.
/// These three integers are the only routing state a node carries.
struct RankCoordinates {
    Rank rank1 = 0;
    Rank rank2 = 0;
    Rank rank3 = 0;

    Rank rank(int order) const {
        assert(order >= 1 && order <= 3);
        switch (order) {
        case 1: return rank1;
        case 2: return rank2;
        default: return rank3;
        }
    }

    bool operator==(const RankCoordinates&) const = default;
};

enum class Ordering { less, greater };

/// Compares u and v in order i (1..3). Equal ranks mean the per-coordinate
/// bijection is broken, which is a corrupted instance, not a valid outcome.
Ordering compare(const RankCoordinates& u, const RankCoordinates& v, int order);

/// One of the six relative-position classes of one node with respect to
/// another. Each sector is a sign pattern of the three order comparisons;
/// the odd sectors s1/s3/s5 correspond to orders 1/2/3 (index 2i-1).
enum class Sector : std::uint8_t { s1 = 1, s2 = 2, s3 = 3, s4 = 4, s5 = 5, s6 = 6 };

constexpr int sector_index(Sector s) { return static_cast<int>(s); }

constexpr Sector sector_from_index(int j) {
    assert(j >= 1 && j <= 6);
    return static_cast<Sector>(j);
}

constexpr bool is_odd_sector(Sector s) { return sector_index(s) % 2 == 1; }

/// s1 -> 1, s3 -> 2, s5 -> 3.
constexpr int odd_sector_order(Sector s) {
    assert(is_odd_sector(s));
    return (sector_index(s) + 1) / 2;
}

constexpr Sector odd_sector_for_order(int order) {
    assert(order >= 1 && order <= 3);
    return sector_from_index(2 * order - 1);
}

/// Wrapping sector arithmetic on indices 1..6.
constexpr Sector sector_step(Sector s, int delta) {
    int j = ((sector_index(s) - 1 + delta) % 6 + 6) % 6 + 1;
    return sector_from_index(j);
}

/// All three inequalities flip between the two endpoints of a pair,
/// so s1<->s4, s2<->s5, s3<->s6.
constexpr Sector opposite_sector(Sector s) { return sector_step(s, 3); }

/// The rank coordinate that strictly decreases while the destination
/// stays in the given even sector of successive nodes:
/// s2 -> rank3, s4 -> rank1, s6 -> rank2.
constexpr int even_monotone_order(Sector s) {
    assert(!is_odd_sector(s));
    switch (s) {
    case Sector::s2: return 3;
    case Sector::s4: return 1;
    default: return 2; // s6
    }
}

const char* to_string(Sector s);

/// Returns the unique sector j with v in s^u_j.
///
/// Throws Error(equal_ranks) if a coordinate ties (bijection broken) and
/// Error(dominance) if all three comparisons point the same way, i.e. the
/// instance violates the empty-intersection condition.
Sector sector_of(const RankCoordinates& u, const RankCoordinates& v);

/// Non-throwing variant used by validators and checkers that must keep
/// scanning corrupted instances: nullopt on ties or triple domination.
std::optional<Sector> try_sector_of(const RankCoordinates& u,
                                    const RankCoordinates& v) noexcept;

// ── Validation ──────────────────────────────────────────────────────

struct Witness {
    std::string rule;
    std::vector<NodeId> nodes;
    std::string detail;

    bool operator==(const Witness&) const = default;
};

struct ValidationOptions {
    /// Max witnesses kept per condition; the total count is exact either
    /// way. Use no_cap for full enumeration.
    std::size_t witness_cap = 16;

    static constexpr std::size_t no_cap = static_cast<std::size_t>(-1);
};

struct ValidationReport {
    bool condition_a_ok = true;
    bool condition_b_ok = true;
    bool standard_ok = true;
    bool structure_ok = true;
    std::vector<Witness> witnesses;
    std::size_t total_violations = 0;

    bool ok() const {
        return condition_a_ok && condition_b_ok && standard_ok && structure_ok;
    }

    void merge(ValidationReport other);

    bool operator==(const ValidationReport&) const = default;
};

using Edge = std::pair<NodeId, NodeId>;

/// Empty-intersection condition: no ordered pair (x,z) may satisfy
/// rank_i(x) < rank_i(z) for all three orders. Exhaustive O(n^2) scan,
/// parallelized; the _serial variant is the reference implementation
/// and produces an identical report.
ValidationReport validate_condition_a(std::span<const RankCoordinates> coords,
                                      const ValidationOptions& opts = {});
ValidationReport validate_condition_a_serial(std::span<const RankCoordinates> coords,
                                             const ValidationOptions& opts = {});

/// Edge condition: for every edge (x,y) and every other node z there is
/// an order i with both x and y ranked below z. Exhaustive O(|E| n).
ValidationReport validate_condition_b(std::span<const RankCoordinates> coords,
                                      std::span<const Edge> edges,
                                      const ValidationOptions& opts = {});
ValidationReport validate_condition_b_serial(std::span<const RankCoordinates> coords,
                                             std::span<const Edge> edges,
                                             const ValidationOptions& opts = {});

/// Standardness: anchor i is maximal in order i and the other two anchors
/// hold ranks {1,2} of order i, in either order.
ValidationReport validate_standard(std::span<const RankCoordinates> coords,
                                   const std::array<NodeId, 3>& anchors,
                                   const ValidationOptions& opts = {});

namespace detail {

/// True when x is ranked below z in all three orders.
inline bool dominated(const RankCoordinates& x, const RankCoordinates& z) {
    return x.rank1 < z.rank1 && x.rank2 < z.rank2 && x.rank3 < z.rank3;
}

/// Edge condition for one (x,y,z) triple.
inline bool edge_condition_holds(const RankCoordinates& x, const RankCoordinates& y,
                                 const RankCoordinates& z) {
    for (int i = 1; i <= 3; ++i) {
        if (x.rank(i) < z.rank(i) && y.rank(i) < z.rank(i)) return true;
    }
    return false;
}

} // namespace detail

} // namespace trirank
