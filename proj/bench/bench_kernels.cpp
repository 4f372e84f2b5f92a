// Times the OpenMP kernels against their serial references and checks that
// both produce identical results while doing so.

#include "trirank/generator.hpp"
#include "trirank/oracle.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const char* kernel, std::size_t n, double serial_ms, double parallel_ms,
            bool match) {
    std::printf("%-22s n=%-6zu serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n",
                kernel, n, serial_ms, parallel_ms,
                parallel_ms > 0.0 ? serial_ms / parallel_ms : 0.0,
                match ? "results match" : "RESULTS DIFFER");
}

} // namespace

int main(int argc, char** argv) {
    std::uint32_t sweep_n = 500;
    std::uint32_t prop_n = 200;
    std::uint32_t cond_n = 1500;
    std::uint64_t seed = 1;

    CLI::App app{"serial vs OpenMP kernel benchmark"};
    app.add_option("--sweep-n", sweep_n, "instance size for the all-pairs sweep");
    app.add_option("--prop-n", prop_n, "instance size for the proposition scan");
    app.add_option("--cond-n", cond_n, "instance size for the condition scans");
    app.add_option("--seed", seed, "generator seed");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    bool all_match = true;

    {
        const auto g = trirank::generate({sweep_n, seed});
        auto t0 = Clock::now();
        const auto serial = trirank::full_sweep_serial(g);
        const double serial_ms = ms_since(t0);
        t0 = Clock::now();
        const auto parallel = trirank::full_sweep(g);
        const double parallel_ms = ms_since(t0);
        const bool match = serial == parallel;
        all_match = all_match && match;
        report("full_sweep", g.size(), serial_ms, parallel_ms, match);
    }

    {
        const auto g = trirank::generate({prop_n, seed});
        trirank::PropositionCheckOptions opts;
        opts.max_nodes = prop_n;
        auto t0 = Clock::now();
        const auto serial = trirank::check_propositions_serial(g, opts);
        const double serial_ms = ms_since(t0);
        t0 = Clock::now();
        const auto parallel = trirank::check_propositions(g, opts);
        const double parallel_ms = ms_since(t0);
        const bool match = serial == parallel;
        all_match = all_match && match;
        report("check_propositions", g.size(), serial_ms, parallel_ms, match);
    }

    {
        const auto g = trirank::generate({cond_n, seed});
        const auto edges = trirank::edge_list(g);
        auto t0 = Clock::now();
        const auto serial_a = trirank::validate_condition_a_serial(g.coords);
        const double serial_a_ms = ms_since(t0);
        t0 = Clock::now();
        const auto parallel_a = trirank::validate_condition_a(g.coords);
        const double parallel_a_ms = ms_since(t0);
        const bool match_a = serial_a == parallel_a;
        all_match = all_match && match_a;
        report("validate_condition_a", g.size(), serial_a_ms, parallel_a_ms, match_a);

        t0 = Clock::now();
        const auto serial_b = trirank::validate_condition_b_serial(g.coords, edges);
        const double serial_b_ms = ms_since(t0);
        t0 = Clock::now();
        const auto parallel_b = trirank::validate_condition_b(g.coords, edges);
        const double parallel_b_ms = ms_since(t0);
        const bool match_b = serial_b == parallel_b;
        all_match = all_match && match_b;
        report("validate_condition_b", g.size(), serial_b_ms, parallel_b_ms, match_b);
    }

    return all_match ? EXIT_SUCCESS : EXIT_FAILURE;
}
