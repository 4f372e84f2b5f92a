#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "trirank/schnyder.hpp"

using namespace trirank;

namespace {

const RankCoordinates kInner{3, 3, 3};
const RankCoordinates kCornerA{4, 1, 1};
const RankCoordinates kCornerC{2, 2, 4};

} // namespace

TEST_CASE("compare follows the per-order ranks") {
    CHECK(compare(kInner, kCornerA, 1) == Ordering::less);
    CHECK(compare(kInner, kCornerA, 2) == Ordering::greater);
    CHECK(compare(kInner, kCornerA, 3) == Ordering::greater);
    CHECK(compare(kCornerA, kInner, 1) == Ordering::greater);
}

TEST_CASE("compare rejects equal ranks") {
    const RankCoordinates u{2, 2, 4};
    const RankCoordinates v{2, 5, 1};
    CHECK_THROWS_WITH_AS(compare(u, v, 1), doctest::Contains("order 1"), Error);
    try {
        compare(u, v, 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::equal_ranks);
    }
}

TEST_CASE("sector_of matches the six comparison patterns") {
    CHECK(sector_of(kInner, kCornerA) == Sector::s1);
    CHECK(sector_of(kCornerA, kInner) == Sector::s4);
    CHECK(sector_of(kInner, kCornerC) == Sector::s5);
    CHECK(sector_of(kInner, RankCoordinates{1, 4, 2}) == Sector::s3);
    CHECK(sector_of(RankCoordinates{1, 4, 2}, kInner) == Sector::s6);
    CHECK(sector_of(kCornerC, kInner) == Sector::s2);
}

TEST_CASE("sector_of rejects triple domination") {
    const RankCoordinates low{1, 1, 1};
    const RankCoordinates high{2, 2, 2};
    CHECK_THROWS_AS((void)sector_of(low, high), Error);
    try {
        (void)sector_of(low, high);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::dominance);
    }
    CHECK(!try_sector_of(low, high).has_value());
    CHECK(!try_sector_of(high, low).has_value());
    CHECK(try_sector_of(kInner, kCornerA) == Sector::s1);
}

TEST_CASE("opposite_sector flips all three inequalities") {
    CHECK(opposite_sector(Sector::s1) == Sector::s4);
    CHECK(opposite_sector(Sector::s2) == Sector::s5);
    CHECK(opposite_sector(Sector::s3) == Sector::s6);
    CHECK(opposite_sector(Sector::s4) == Sector::s1);
    CHECK(opposite_sector(Sector::s5) == Sector::s2);
    CHECK(opposite_sector(Sector::s6) == Sector::s3);
}

TEST_CASE("sector helpers") {
    CHECK(odd_sector_order(Sector::s1) == 1);
    CHECK(odd_sector_order(Sector::s3) == 2);
    CHECK(odd_sector_order(Sector::s5) == 3);
    CHECK(odd_sector_for_order(2) == Sector::s3);
    CHECK(sector_step(Sector::s6, 1) == Sector::s1);
    CHECK(sector_step(Sector::s2, -1) == Sector::s1);
    CHECK(even_monotone_order(Sector::s2) == 3);
    CHECK(even_monotone_order(Sector::s4) == 1);
    CHECK(even_monotone_order(Sector::s6) == 2);
}

TEST_CASE("antipodality and exactly-one-odd over all pairs of the 4-node instance") {
    const auto g = testfix::k4();
    for (NodeId u = 0; u < g.size(); ++u) {
        for (NodeId v = 0; v < g.size(); ++v) {
            if (u == v) continue;
            const Sector j = sector_of(g.coords[u], g.coords[v]);
            CHECK(sector_of(g.coords[v], g.coords[u]) == opposite_sector(j));

            // Exactly one of the two directions lands in an odd sector.
            const bool uv_odd = is_odd_sector(j);
            const bool vu_odd = is_odd_sector(sector_of(g.coords[v], g.coords[u]));
            CHECK(uv_odd != vu_odd);
        }
    }
}

TEST_CASE("odd sectors coincide with the three-inequality pair relation") {
    // Re-derive membership directly from raw ranks: (u,v) relates in order i
    // exactly when u is below v in order i and v is below u in both others.
    const auto g = testfix::k4();
    for (NodeId u = 0; u < g.size(); ++u) {
        for (NodeId v = 0; v < g.size(); ++v) {
            if (u == v) continue;
            const RankCoordinates& cu = g.coords[u];
            const RankCoordinates& cv = g.coords[v];
            for (int i = 1; i <= 3; ++i) {
                const int prev = (i + 1) % 3 + 1;
                const int next = i % 3 + 1;
                const bool related = cu.rank(i) < cv.rank(i) &&
                                     cv.rank(next) < cu.rank(next) &&
                                     cv.rank(prev) < cu.rank(prev);
                const bool in_odd =
                    sector_of(cu, cv) == odd_sector_for_order(i);
                CHECK(related == in_odd);
            }
        }
    }
}

TEST_CASE("condition a passes on the 4-node instance") {
    const auto g = testfix::k4();
    const auto report = validate_condition_a_serial(g.coords);
    CHECK(report.condition_a_ok);
    CHECK(report.witnesses.empty());
    CHECK(report.total_violations == 0);
}

TEST_CASE("condition a fails with a witness on a dominated pair") {
    const std::vector<RankCoordinates> coords = {{1, 1, 1}, {2, 2, 2}};
    const auto report = validate_condition_a_serial(coords);
    CHECK(!report.condition_a_ok);
    REQUIRE(report.witnesses.size() == 1);
    CHECK(report.witnesses[0].rule == "condition_a");
    CHECK(report.witnesses[0].nodes == std::vector<NodeId>{0, 1});
    CHECK(report.total_violations == 1);
}

TEST_CASE("condition a is vacuous on a single node") {
    const std::vector<RankCoordinates> coords = {{1, 1, 1}};
    CHECK(validate_condition_a_serial(coords).condition_a_ok);
}

TEST_CASE("condition a witness list is capped but the count is exact") {
    // Every ordered pair (i, j) with i < j is dominated: 45 violations.
    std::vector<RankCoordinates> coords;
    for (Rank r = 1; r <= 10; ++r) coords.push_back({r, r, r});
    ValidationOptions opts;
    opts.witness_cap = 4;
    const auto report = validate_condition_a_serial(coords, opts);
    CHECK(!report.condition_a_ok);
    CHECK(report.witnesses.size() == 4);
    CHECK(report.total_violations == 45);
}

TEST_CASE("condition b passes on the 4-node instance") {
    const auto g = testfix::k4();
    const auto edges = edge_list(g);
    REQUIRE(edges.size() == 6);
    const auto report = validate_condition_b_serial(g.coords, edges);
    CHECK(report.condition_b_ok);
    CHECK(report.witnesses.empty());

    // Spot check one triple by hand: edge (internal, A1) against A2 is
    // satisfied by order 2 alone.
    const RankCoordinates& x = g.coords[testfix::kU];
    const RankCoordinates& y = g.coords[testfix::kA1];
    const RankCoordinates& z = g.coords[testfix::kA2];
    CHECK((x.rank2 < z.rank2 && y.rank2 < z.rank2));
}

TEST_CASE("condition b reports the failing triple") {
    // Edge (0,1) against node 2: in every order, node 2 ranks below one of
    // the endpoints, so no order puts both endpoints below it.
    const std::vector<RankCoordinates> coords = {{3, 1, 2}, {1, 3, 3}, {2, 2, 1}};
    const std::vector<Edge> edges = {{0, 1}};
    const auto report = validate_condition_b_serial(coords, edges);
    CHECK(!report.condition_b_ok);
    REQUIRE(report.witnesses.size() == 1);
    CHECK(report.witnesses[0].nodes == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("standardness accepts the 4-node instance") {
    const auto g = testfix::k4();
    const auto report = validate_standard(g.coords, g.anchors);
    CHECK(report.standard_ok);
    CHECK(report.witnesses.empty());
}

TEST_CASE("standardness accepts both orders of the two smallest anchors") {
    // Same instance with ranks 1 and 2 of order 1 exchanged between the
    // non-own anchors.
    std::vector<RankCoordinates> coords = {{4, 1, 1}, {2, 4, 2}, {1, 2, 4}, {3, 3, 3}};
    CHECK(validate_standard(coords, {0, 1, 2}).standard_ok);
}

TEST_CASE("standardness names the offending anchor") {
    auto g = testfix::k4();
    std::swap(g.coords[testfix::kA1].rank1, g.coords[testfix::kU].rank1);
    const auto report = validate_standard(g.coords, g.anchors);
    CHECK(!report.standard_ok);
    REQUIRE(!report.witnesses.empty());
    CHECK(report.witnesses[0].rule == "standard");
    CHECK(report.witnesses[0].nodes == std::vector<NodeId>{testfix::kA1});
}

TEST_CASE("validation report merge combines flags, witnesses and counts") {
    ValidationReport a;
    a.condition_a_ok = false;
    a.witnesses.push_back({"condition_a", {0, 1}, ""});
    a.total_violations = 1;
    ValidationReport b;
    b.standard_ok = false;
    b.witnesses.push_back({"standard", {2}, ""});
    b.total_violations = 3;
    a.merge(b);
    CHECK(!a.condition_a_ok);
    CHECK(!a.standard_ok);
    CHECK(a.condition_b_ok);
    CHECK(a.witnesses.size() == 2);
    CHECK(a.total_violations == 4);
    CHECK(!a.ok());
}
