#include "trirank/io.hpp"

#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace trirank {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_coordinate(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

[[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorCode::parse_error, what);
}

double parse_coordinate(const nlohmann::json& j) {
    if (!j.is_string()) fail("position coordinates must be decimal strings");
    const std::string s = j.get<std::string>();
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) fail("malformed position coordinate '" + s + "'");
        return v;
    } catch (const std::exception&) {
        fail("malformed position coordinate '" + s + "'");
    }
}

} // namespace

std::string serialize_graph(const GraphFile& file) {
    const Triangulation& g = file.graph;
    ordered_json j;
    j["format_version"] = file.format_version;
    if (file.generator) {
        ordered_json meta;
        meta["algorithm"] = file.generator->algorithm;
        meta["n"] = file.generator->n;
        meta["seed"] = file.generator->seed;
        meta["version"] = file.generator->version;
        j["generator"] = std::move(meta);
    }
    j["anchors"] = {g.anchors[0], g.anchors[1], g.anchors[2]};

    ordered_json nodes = ordered_json::array();
    for (NodeId u = 0; u < g.size(); ++u) {
        ordered_json node;
        node["id"] = u;
        node["rank"] = {g.coords[u].rank1, g.coords[u].rank2, g.coords[u].rank3};
        if (!g.positions.empty()) {
            node["position"] = {format_coordinate(g.positions[u].x),
                                format_coordinate(g.positions[u].y)};
        }
        nodes.push_back(std::move(node));
    }
    j["nodes"] = std::move(nodes);

    ordered_json edges = ordered_json::array();
    for (const auto& [a, b] : edge_list(g)) {
        edges.push_back({a, b});
    }
    j["edges"] = std::move(edges);

    return j.dump(2) + "\n";
}

GraphFile parse_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) fail("top-level value is not an object");
    if (!j.contains("format_version") || !j["format_version"].is_string()) {
        fail("missing format_version");
    }

    GraphFile file;
    file.format_version = j["format_version"].get<std::string>();
    if (file.format_version != "1") {
        fail("unsupported format_version '" + file.format_version + "'");
    }

    if (j.contains("generator")) {
        const auto& m = j["generator"];
        if (!m.is_object()) fail("generator metadata is not an object");
        GeneratorMeta meta;
        meta.algorithm = m.value("algorithm", std::string{});
        if (!m.contains("n") || !m["n"].is_number_unsigned()) fail("generator.n missing");
        meta.n = m["n"].get<std::uint32_t>();
        if (!m.contains("seed") || !m["seed"].is_number_unsigned()) {
            fail("generator.seed missing");
        }
        meta.seed = m["seed"].get<std::uint64_t>();
        meta.version = m.value("version", std::string{});
        file.generator = std::move(meta);
    }

    if (!j.contains("nodes") || !j["nodes"].is_array() || j["nodes"].empty()) {
        fail("missing nodes array");
    }
    const std::size_t n = j["nodes"].size();

    std::vector<RankCoordinates> coords(n);
    std::vector<Point> positions;
    std::vector<bool> seen(n, false);
    std::size_t with_position = 0;
    positions.assign(n, {});
    for (const auto& node : j["nodes"]) {
        if (!node.is_object()) fail("node entry is not an object");
        if (!node.contains("id") || !node["id"].is_number_unsigned()) {
            fail("node id missing");
        }
        const std::uint64_t id = node["id"].get<std::uint64_t>();
        if (id >= n) fail("node id " + std::to_string(id) + " not dense in [0, n)");
        if (seen[id]) fail("duplicate node id " + std::to_string(id));
        seen[id] = true;
        if (!node.contains("rank") || !node["rank"].is_array() ||
            node["rank"].size() != 3) {
            fail("node " + std::to_string(id) + " needs a rank triple");
        }
        for (int i = 0; i < 3; ++i) {
            if (!node["rank"][static_cast<std::size_t>(i)].is_number_integer()) {
                fail("node " + std::to_string(id) + " rank is not an integer");
            }
        }
        coords[id] = {node["rank"][0].get<Rank>(), node["rank"][1].get<Rank>(),
                      node["rank"][2].get<Rank>()};
        if (node.contains("position")) {
            const auto& p = node["position"];
            if (!p.is_array() || p.size() != 2) {
                fail("node " + std::to_string(id) + " position must be [x, y]");
            }
            positions[id] = {parse_coordinate(p[0]), parse_coordinate(p[1])};
            with_position += 1;
        }
    }
    if (with_position != 0 && with_position != n) {
        fail("positions present for some nodes but not all");
    }
    if (with_position == 0) positions.clear();

    // Each coordinate must be a permutation of 1..n; the message names the
    // coordinate so a corrupted file is actionable.
    for (int order = 1; order <= 3; ++order) {
        std::vector<NodeId> holder(n + 1, static_cast<NodeId>(-1));
        for (NodeId u = 0; u < n; ++u) {
            const Rank r = coords[u].rank(order);
            if (r < 1 || static_cast<std::size_t>(r) > n) {
                fail("rank_" + std::to_string(order) + " of node " + std::to_string(u) +
                     " is " + std::to_string(r) + ", outside [1, " + std::to_string(n) +
                     "]");
            }
            if (holder[static_cast<std::size_t>(r)] != static_cast<NodeId>(-1)) {
                fail("rank_" + std::to_string(order) + " is not a permutation: nodes " +
                     std::to_string(holder[static_cast<std::size_t>(r)]) + " and " +
                     std::to_string(u) + " share rank " + std::to_string(r));
            }
            holder[static_cast<std::size_t>(r)] = u;
        }
    }

    if (!j.contains("anchors") || !j["anchors"].is_array() || j["anchors"].size() != 3) {
        fail("missing anchors triple");
    }
    std::array<NodeId, 3> anchors{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!j["anchors"][i].is_number_unsigned()) fail("anchor id must be unsigned");
        anchors[i] = j["anchors"][i].get<NodeId>();
    }

    std::vector<Edge> edges;
    if (!j.contains("edges") || !j["edges"].is_array()) fail("missing edges array");
    edges.reserve(j["edges"].size());
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
            !e[1].is_number_unsigned()) {
            fail("edge entries must be [id, id]");
        }
        edges.emplace_back(e[0].get<NodeId>(), e[1].get<NodeId>());
    }

    file.graph = build_triangulation(std::move(coords), std::move(edges), anchors,
                                     std::move(positions));
    return file;
}

GraphFile load_graph(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::io_error, "cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

void save_text(const std::string& text, const std::filesystem::path& path) {
    namespace fs = std::filesystem;
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    const fs::path tmp = dir / (path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorCode::io_error, "cannot write " + tmp.string());
        }
        out << text;
        out.flush();
        if (!out) {
            throw Error(ErrorCode::io_error, "short write to " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        throw Error(ErrorCode::io_error,
                    "cannot rename " + tmp.string() + " to " + path.string() + ": " +
                        ec.message());
    }
}

std::string trace_json(const RouteTrace& trace, const CertificateResult& cert) {
    ordered_json j;
    j["source"] = trace.source;
    j["destination"] = trace.destination;
    j["delivered"] = trace.delivered;
    if (cert.certificate) {
        ordered_json c;
        c["order"] = cert.certificate->order;
        c["direction"] = cert.certificate->increasing ? "increasing" : "decreasing";
        j["certificate"] = std::move(c);
    } else {
        j["certificate"] = nullptr;
    }
    ordered_json hops = ordered_json::array();
    for (const Hop& h : trace.hops) {
        ordered_json entry;
        entry["node"] = h.node;
        entry["kind"] = to_string(h.decision.kind);
        entry["sector"] = sector_index(h.decision.sector_at_decision);
        hops.push_back(std::move(entry));
    }
    j["hops"] = std::move(hops);
    return j.dump(2) + "\n";
}

std::string sweep_json(const SweepStats& stats) {
    ordered_json j;
    j["pairs_total"] = stats.pairs_total;
    j["pairs_delivered"] = stats.pairs_delivered;
    j["max_hops"] = stats.max_hops;
    j["mean_stretch"] = stats.mean_stretch;
    ordered_json violations = ordered_json::array();
    for (const Witness& w : stats.violations) {
        ordered_json entry;
        entry["property"] = w.rule;
        entry["nodes"] = w.nodes;
        entry["detail"] = w.detail;
        violations.push_back(std::move(entry));
    }
    j["violations"] = std::move(violations);
    return j.dump(2) + "\n";
}

} // namespace trirank
