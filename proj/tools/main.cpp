// coprime: exact counting of integer tuples under pairwise-coprimality
// constraints described by a graph, the density of such tuples as a
// certified Euler product, and an empirical harness for the error term.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coprime/counting.hpp"
#include "coprime/density.hpp"
#include "coprime/graph.hpp"
#include "coprime/multiplicative.hpp"
#include "coprime/polynomial.hpp"
#include "coprime/report.hpp"
#include "coprime/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw coprime::domain_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

coprime::Graph load_graph(const std::string& path) {
    return coprime::parse_graph(read_file(path));
}

} // namespace

int main(int argc, char** argv) {
    using namespace coprime;

    CLI::App app{"exact counting of tuples under pairwise-coprimality constraints"};
    app.require_subcommand(1);

    std::string graph_path;
    bool plus = false;
    int64_t prime_bound = 1'000'000;
    int64_t x = 0;
    int64_t m = 1;
    int threads = 1;
    std::string method = "both";
    std::string format = "tsv";
    std::vector<int64_t> xs;
    VerifyOptions verify_options;

    CLI::App* poly_cmd = app.add_subcommand("poly", "exact cover-polynomial coefficients");
    poly_cmd->add_option("--graph", graph_path, "graph file")->required();
    poly_cmd->add_flag("--plus", plus, "unsigned variant");

    CLI::App* density_cmd = app.add_subcommand("density", "truncated Euler product with tail bound");
    density_cmd->add_option("--graph", graph_path, "graph file")->required();
    density_cmd->add_option("--prime-bound", prime_bound, "truncation point P")
        ->check(CLI::Range(int64_t(2), int64_t(100'000'000)));

    CLI::App* count_cmd = app.add_subcommand("count", "exact tuple count g(x)");
    count_cmd->add_option("--graph", graph_path, "graph file")->required();
    count_cmd->add_option("--x", x, "coordinate bound")->required()->check(CLI::PositiveNumber);
    count_cmd->add_option("--method", method, "bruteforce|moebius|both")
        ->check(CLI::IsMember({"bruteforce", "moebius", "both"}));
    count_cmd->add_option("--threads", threads, "partition the outer loop")
        ->check(CLI::Range(1, 256));

    CLI::App* f_cmd = app.add_subcommand("f", "edge-numbering sum f(m), both routes");
    f_cmd->add_option("--graph", graph_path, "graph file")->required();
    f_cmd->add_option("--m", m, "target integer")->required()->check(CLI::PositiveNumber);
    f_cmd->add_flag("--plus", plus, "unsigned variant");

    CLI::App* table_cmd = app.add_subcommand("table", "error diagnostics over several x");
    table_cmd->add_option("--graph", graph_path, "graph file")->required();
    table_cmd->add_option("--xs", xs, "comma-separated x values")->required()->delimiter(',');
    table_cmd->add_option("--prime-bound", prime_bound, "truncation point P")
        ->check(CLI::Range(int64_t(2), int64_t(100'000'000)));
    table_cmd->add_option("--threads", threads, "partition the outer loop")
        ->check(CLI::Range(1, 256));
    table_cmd->add_option("--format", format, "tsv|json")->check(CLI::IsMember({"tsv", "json"}));

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity suites");
    verify_cmd->add_option("--max-vertices", verify_options.max_vertices, "graph family size")
        ->check(CLI::Range(1, 4));
    verify_cmd->add_option("--max-x", verify_options.max_x, "counter agreement range")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--prime-bound", verify_options.prime_bound, "truncation point P")
        ->check(CLI::Range(int64_t(2), int64_t(100'000'000)));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (poly_cmd->parsed()) {
            const Graph g = load_graph(graph_path);
            std::cout << render_poly_json(compute_polynomial(g, !plus)) << '\n';
        } else if (density_cmd->parsed()) {
            const Graph g = load_graph(graph_path);
            std::cout << render_density_json(density(g, prime_bound)) << '\n';
        } else if (count_cmd->parsed()) {
            const Graph g = load_graph(graph_path);
            if (method == "bruteforce") {
                std::cout << render_count_json(count_bruteforce(g, x, threads)) << '\n';
            } else if (method == "moebius") {
                std::cout << render_count_json(count_moebius(g, x, threads)) << '\n';
            } else {
                const CountResult brute = count_bruteforce(g, x, threads);
                const CountResult moebius = count_moebius(g, x, threads);
                const bool agree = brute.count == moebius.count;
                std::cout << render_count_both_json(brute, agree) << '\n';
                if (!agree) {
                    std::cerr << "error: exact counters disagree at x=" << x << '\n';
                    return 1;
                }
            }
        } else if (f_cmd->parsed()) {
            const Graph g = load_graph(graph_path);
            const GraphPolynomial poly = compute_polynomial(g, !plus);
            const int128 by_table = f_multiplicative(poly, m);
            bool enumerated = true;
            int128 by_enumeration = 0;
            try {
                by_enumeration = f_enumerate(g, m, !plus);
            } catch (const feasibility_error&) {
                enumerated = false;
            }
            if (enumerated) {
                const bool agree = by_enumeration == by_table;
                std::cout << render_f_json(by_enumeration, "both", agree) << '\n';
                if (!agree) {
                    std::cerr << "error: enumeration and multiplicative routes disagree at m=" << m
                              << '\n';
                    return 1;
                }
            } else {
                std::cout << render_f_json(by_table, "multiplicative", true) << '\n';
            }
        } else if (table_cmd->parsed()) {
            const Graph g = load_graph(graph_path);
            const DensityEstimate est = density(g, prime_bound);
            std::vector<ErrorDiagnostic> rows;
            rows.reserve(xs.size());
            for (int64_t xi : xs) rows.push_back(error_diagnostic(g, xi, est, threads));
            std::cout << (format == "tsv" ? render_table_tsv(rows) : render_table_json(rows) + "\n");
        } else if (verify_cmd->parsed()) {
            const std::vector<SuiteResult> suites = run_verify(verify_options);
            std::cout << render_verify_json(suites) << '\n';
            if (!all_passed(suites)) return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
