#pragma once

// Shared internals of the serial and OpenMP proposition checkers: sector
// memoization and the canonical witness order both variants sort into.

#include "trirank/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace trirank::detail {

/// Dense sector lookup: entry u*n+v holds the sector index 1..6 of v
/// relative to u, or 0 when undefined (ties or domination).
class SectorMatrix {
public:
    explicit SectorMatrix(const Triangulation& g)
        : n_(g.size()), cells_(n_ * n_, 0) {
        for (std::size_t u = 0; u < n_; ++u) {
            for (std::size_t v = 0; v < n_; ++v) {
                if (u == v) continue;
                if (auto s = try_sector_of(g.coords[u], g.coords[v])) {
                    cells_[u * n_ + v] = static_cast<std::int8_t>(sector_index(*s));
                }
            }
        }
    }

    int operator()(std::size_t u, std::size_t v) const { return cells_[u * n_ + v]; }

private:
    std::size_t n_;
    std::vector<std::int8_t> cells_;
};

inline bool witness_less(const Witness& a, const Witness& b) {
    if (a.rule != b.rule) return a.rule < b.rule;
    if (a.nodes != b.nodes) return a.nodes < b.nodes;
    return a.detail < b.detail;
}

inline void sort_witnesses(std::vector<Witness>& ws) {
    std::sort(ws.begin(), ws.end(), witness_less);
}

/// Sectors a third node D must avoid relative to v when D shares v's odd
/// sector of u: the three sectors whose first comparison would reverse the
/// monotone coordinate of that odd sector's order.
inline bool excluded_after_odd(int odd_sector, int sector_of_v_d) {
    switch (odd_sector) {
    case 1: return sector_of_v_d == 3 || sector_of_v_d == 4 || sector_of_v_d == 5;
    case 3: return sector_of_v_d == 1 || sector_of_v_d == 5 || sector_of_v_d == 6;
    case 5: return sector_of_v_d == 1 || sector_of_v_d == 2 || sector_of_v_d == 3;
    default: return false;
    }
}

} // namespace trirank::detail
