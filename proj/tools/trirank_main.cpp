// Command-line surface: generate / validate / route / sweep / render.
// Exit codes are uniform across subcommands: 0 success, 1 semantic failure
// (validation or routing), 2 usage or parse error.

#include "trirank/generator.hpp"
#include "trirank/io.hpp"
#include "trirank/oracle.hpp"
#include "trirank/render.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

using namespace trirank;

constexpr int kOk = 0;
constexpr int kSemanticFailure = 1;
constexpr int kUsageError = 2;

int exit_code_for(const Error& e) {
    switch (e.code()) {
    case ErrorCode::parse_error:
    case ErrorCode::degenerate_input:
    case ErrorCode::unknown_node:
    case ErrorCode::too_large:
        return kUsageError;
    default:
        return kSemanticFailure;
    }
}

void print_report(const ValidationReport& report) {
    auto line = [](const char* name, bool ok) {
        std::printf("%-12s %s\n", name, ok ? "PASS" : "FAIL");
    };
    line("condition_a", report.condition_a_ok);
    line("condition_b", report.condition_b_ok);
    line("standard", report.standard_ok);
    line("structure", report.structure_ok);
    if (!report.ok()) {
        std::printf("violations: %zu total, %zu witnesses shown\n",
                    report.total_violations, report.witnesses.size());
        for (const Witness& w : report.witnesses) {
            std::string ids;
            for (NodeId u : w.nodes) {
                if (!ids.empty()) ids += ", ";
                ids += std::to_string(u);
            }
            std::printf("  [%s] (%s) %s\n", w.rule.c_str(), ids.c_str(),
                        w.detail.c_str());
        }
    }
}

void print_trace_summary(const RouteTrace& trace, const CertificateResult& cert) {
    std::printf("route %u -> %u: %s, %zu hop%s\n", trace.source, trace.destination,
                trace.delivered ? "delivered" : "NOT delivered", trace.hops.size(),
                trace.hops.size() == 1 ? "" : "s");
    if (cert.certificate) {
        std::printf("certificate: rank_%d %s\n", cert.certificate->order,
                    cert.certificate->increasing ? "increasing" : "decreasing");
    }
    NodeId prev = trace.source;
    for (const Hop& h : trace.hops) {
        std::printf("  %u -(%s, dest in %s)-> %u\n", prev,
                    to_string(h.decision.kind),
                    to_string(h.decision.sector_at_decision), h.node);
        prev = h.node;
    }
}

struct GenerateArgs {
    std::uint32_t n = 0;
    std::uint64_t seed = 0;
    double side = 1.0;
    std::string out;
};

int cmd_generate(const GenerateArgs& args) {
    const GeneratorConfig cfg{args.n, args.seed, args.side};
    const Triangulation g = generate(cfg);
    GraphFile file;
    file.generator = GeneratorMeta{kGeneratorAlgorithm, args.n, args.seed, kVersion};
    file.graph = g;
    save_text(serialize_graph(file), args.out);
    std::printf("n=%u edges=%zu seed=%llu -> %s\n", args.n, edge_list(g).size(),
                static_cast<unsigned long long>(args.seed), args.out.c_str());
    return kOk;
}

int cmd_validate(const std::string& path, bool all_witnesses) {
    const GraphFile file = load_graph(path);
    ValidationOptions opts;
    if (all_witnesses) opts.witness_cap = ValidationOptions::no_cap;
    const ValidationReport report = validate_structure(file.graph, opts);
    print_report(report);
    return report.ok() ? kOk : kSemanticFailure;
}

int cmd_route(const std::string& path, NodeId from, NodeId to, bool as_json) {
    const GraphFile file = load_graph(path);
    const Triangulation& g = file.graph;
    if (from >= g.size() || to >= g.size()) {
        throw Error(ErrorCode::unknown_node,
                    "route endpoints must lie in [0, " + std::to_string(g.size()) + ")");
    }
    RouteTrace trace;
    try {
        trace = route(g, from, to);
    } catch (const RouteError& e) {
        // Surface the partial trace for diagnosis.
        std::fprintf(stderr, "error: [%s] %s\n", to_string(e.code()), e.what());
        const CertificateResult none{};
        if (as_json) {
            std::fputs(trace_json(e.partial_trace(), none).c_str(), stdout);
        } else {
            print_trace_summary(e.partial_trace(), none);
        }
        return kSemanticFailure;
    }
    const CertificateResult cert = is_greedy_path(g, trace);
    if (as_json) {
        std::fputs(trace_json(trace, cert).c_str(), stdout);
    } else {
        print_trace_summary(trace, cert);
    }
    return trace.delivered ? kOk : kSemanticFailure;
}

int cmd_sweep(const std::string& path, int jobs) {
    const GraphFile file = load_graph(path);
    SweepOptions opts;
    opts.jobs = jobs;
    const SweepStats stats = full_sweep(file.graph, opts);
    std::fputs(sweep_json(stats).c_str(), stdout);
    const bool ok =
        stats.pairs_delivered == stats.pairs_total && stats.violations.empty();
    return ok ? kOk : kSemanticFailure;
}

int cmd_render(const std::string& path, const std::vector<NodeId>& route_ids,
               const std::string& out) {
    const GraphFile file = load_graph(path);
    const Triangulation& g = file.graph;
    std::string svg;
    if (!route_ids.empty()) {
        if (route_ids[0] >= g.size() || route_ids[1] >= g.size()) {
            throw Error(ErrorCode::unknown_node,
                        "route endpoints must lie in [0, " + std::to_string(g.size()) +
                            ")");
        }
        const RouteTrace trace = route(g, route_ids[0], route_ids[1]);
        svg = render_svg(g, &trace);
    } else {
        svg = render_svg(g);
    }
    save_text(svg, out);
    std::printf("rendered %zu nodes, %zu edges -> %s\n", g.size(),
                edge_list(g).size(), out.c_str());
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"metric-free greedy routing on rank-coordinate triangulations"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate_cmd =
        app.add_subcommand("generate", "generate a random instance");
    generate_cmd->add_option("--n", gen.n, "total node count (>= 4)")->required();
    generate_cmd->add_option("--seed", gen.seed, "random seed")->default_val(0);
    generate_cmd->add_option("--side", gen.side, "anchor triangle side")
        ->default_val(1.0);
    generate_cmd->add_option("--out", gen.out, "output graph file")->required();

    std::string validate_path;
    bool all_witnesses = false;
    CLI::App* validate_cmd =
        app.add_subcommand("validate", "check representation and structure");
    validate_cmd->add_option("path", validate_path, "graph file")->required();
    validate_cmd->add_flag("--all-witnesses", all_witnesses,
                           "enumerate every violation instead of a sample");

    std::string route_path;
    NodeId route_from = 0, route_to = 0;
    bool route_json = false;
    CLI::App* route_cmd = app.add_subcommand("route", "route one ordered pair");
    route_cmd->add_option("path", route_path, "graph file")->required();
    route_cmd->add_option("--from", route_from, "source node id")->required();
    route_cmd->add_option("--to", route_to, "destination node id")->required();
    route_cmd->add_flag("--trace", route_json, "emit the trace as JSON");

    std::string sweep_path;
    int sweep_jobs = 0;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "route and certify every ordered pair");
    sweep_cmd->add_option("path", sweep_path, "graph file")->required();
    sweep_cmd->add_option("--jobs", sweep_jobs, "worker threads (0 = default)")
        ->default_val(0);

    std::string render_path, render_out;
    std::vector<NodeId> render_route;
    CLI::App* render_cmd = app.add_subcommand("render", "draw the instance as SVG");
    render_cmd->add_option("path", render_path, "graph file")->required();
    render_cmd->add_option("--route", render_route, "overlay a route FROM TO")
        ->expected(2);
    render_cmd->add_option("--out", render_out, "output SVG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (generate_cmd->parsed()) return cmd_generate(gen);
        if (validate_cmd->parsed()) return cmd_validate(validate_path, all_witnesses);
        if (route_cmd->parsed()) {
            return cmd_route(route_path, route_from, route_to, route_json);
        }
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_path, sweep_jobs);
        if (render_cmd->parsed()) {
            return cmd_render(render_path, render_route, render_out);
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: [%s] %s\n", to_string(e.code()), e.what());
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kSemanticFailure;
    }
    return kUsageError;
}
