#pragma once

#include "trirank/oracle.hpp"
#include "trirank/triangulation.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace trirank {

struct GeneratorMeta {
    std::string algorithm;
    std::uint32_t n = 0;
    std::uint64_t seed = 0;
    std::string version;

    bool operator==(const GeneratorMeta&) const = default;
};

/// On-disk graph document. The JSON layout is canonical: fixed field order
/// (format_version, generator, anchors, nodes, edges), nodes ascending by
/// id with per-node fields (id, rank, position), edges as (low, high)
/// pairs in ascending order, positions as decimal strings of 12 significant
/// digits. A canonical file re-serializes byte-identically after parsing.
struct GraphFile {
    std::string format_version = "1";
    std::optional<GeneratorMeta> generator;
    Triangulation graph;
};

/// Canonical JSON text of the document.
std::string serialize_graph(const GraphFile& file);

/// Parses and validates a document: JSON shape, dense ids, per-coordinate
/// rank permutations (the error message names the offending coordinate),
/// well-formed edges and anchors. Throws Error(parse_error).
GraphFile parse_graph(const std::string& text);

GraphFile load_graph(const std::filesystem::path& path);

/// Write-then-rename, so readers never observe a partial file.
void save_text(const std::string& text, const std::filesystem::path& path);

/// Trace document: {source, destination, delivered, certificate, hops};
/// certificate is null when the trace admits none, hops carry the decision
/// kind and the destination's sector at each decision.
std::string trace_json(const RouteTrace& trace, const CertificateResult& cert);

std::string sweep_json(const SweepStats& stats);

} // namespace trirank
