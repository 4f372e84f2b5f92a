#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "trirank/generator.hpp"
#include "trirank/render.hpp"

#include <string>

using namespace trirank;

namespace {

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

} // namespace

TEST_CASE("the 4-node instance renders with all nodes and edges") {
    const std::string svg = render_svg(testfix::k4());
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") !=
          std::string::npos);
    CHECK(count_occurrences(svg, "<circle") == 4);
    CHECK(count_occurrences(svg, "<line") == 6);
    CHECK(svg.find(">A1<") != std::string::npos);
    CHECK(svg.find(">A2<") != std::string::npos);
    CHECK(svg.find(">A3<") != std::string::npos);
    CHECK(count_occurrences(svg, "</svg>") == 1);
}

TEST_CASE("instances without positions fall back to barycentric placement") {
    auto g = generate({30, 42});
    g.positions.clear();
    const std::string svg = render_svg(g);
    CHECK(count_occurrences(svg, "<circle") == 30);
    CHECK(count_occurrences(svg, "<line") == edge_list(g).size());
}

TEST_CASE("a route overlays as a polyline of trace length") {
    const auto g = generate({30, 42});
    const auto trace = route(g, 5, 17);
    const std::string svg = render_svg(g, &trace);
    CHECK(count_occurrences(svg, "<polyline") == 1);

    const std::size_t start = svg.find("points=\"", svg.find("<polyline"));
    REQUIRE(start != std::string::npos);
    const std::size_t end = svg.find('"', start + 8);
    const std::string points = svg.substr(start + 8, end - start - 8);
    CHECK(count_occurrences(points, ",") == trace.hops.size() + 1);
    CHECK(svg.find("marker-end") != std::string::npos);
}

TEST_CASE("an empty route draws no polyline") {
    const auto g = testfix::k4();
    const auto trace = route(g, 2, 2);
    const std::string svg = render_svg(g, &trace);
    CHECK(count_occurrences(svg, "<polyline") == 0);
}
