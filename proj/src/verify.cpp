#include "coprime/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <random>

#include "coprime/counting.hpp"
#include "coprime/density.hpp"
#include "coprime/graph.hpp"
#include "coprime/multiplicative.hpp"
#include "coprime/polynomial.hpp"

namespace coprime {

namespace {

std::string fmt1(const char* pattern, double a) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a);
    return buf;
}

std::string fmt2(const char* pattern, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

// Every edge subset of the complete graph on v vertices.
std::vector<Graph> all_edge_subsets(int v) {
    std::vector<Edge> full;
    for (int r = 1; r <= v; ++r)
        for (int s = r + 1; s <= v; ++s) full.push_back({r, s});
    std::vector<Graph> out;
    out.reserve(size_t(1) << full.size());
    for (uint32_t mask = 0; mask < (uint32_t(1) << full.size()); ++mask) {
        std::vector<Edge> edges;
        for (size_t i = 0; i < full.size(); ++i)
            if (mask >> i & 1) edges.push_back(full[i]);
        out.push_back(Graph(v, std::move(edges)));
    }
    return out;
}

void record_failure(SuiteResult& suite, const std::string& note) {
    ++suite.failures;
    if (suite.note.empty()) suite.note = note;
}

} // namespace

SuiteResult check_counter_agreement(int max_vertices, int64_t max_x) {
    SuiteResult suite{.name = "counter_agreement"};
    for (const Graph& g : all_edge_subsets(max_vertices)) {
        for (int64_t x = 1; x <= max_x; ++x) {
            ++suite.cases;
            const int128 brute = count_bruteforce(g, x).count;
            const int128 moebius = count_moebius(g, x).count;
            if (brute != moebius)
                record_failure(suite, "e=" + std::to_string(g.edge_count()) + " x=" +
                                          std::to_string(x) + ": bruteforce " + to_string(brute) +
                                          " != moebius " + to_string(moebius));
        }
    }
    return suite;
}

SuiteResult check_prime_power_coefficients(int max_vertices) {
    SuiteResult suite{.name = "prime_power_coefficients"};
    for (const Graph& g : all_edge_subsets(max_vertices)) {
        for (bool signed_terms : {true, false}) {
            const GraphPolynomial poly = compute_polynomial(g, signed_terms);
            for (int64_t p : {2, 3, 5}) {
                int64_t pk = 1;
                for (int k = 0; k <= g.vertex_count(); ++k, pk *= p) {
                    ++suite.cases;
                    const int128 by_enumeration = f_enumerate(g, pk, signed_terms);
                    const int128 by_coefficient = f_prime_power(poly, k);
                    if (by_enumeration != by_coefficient)
                        record_failure(suite, "e=" + std::to_string(g.edge_count()) + " p=" +
                                                  std::to_string(p) + " k=" + std::to_string(k) +
                                                  ": " + to_string(by_enumeration) +
                                                  " != " + to_string(by_coefficient));
                }
            }
        }
    }
    return suite;
}

SuiteResult check_multiplicativity(int max_vertices, int64_t product_limit) {
    SuiteResult suite{.name = "multiplicativity"};
    for (const Graph& g : all_edge_subsets(max_vertices)) {
        for (bool signed_terms : {true, false}) {
            for (int64_t m1 = 1; m1 <= product_limit; ++m1)
                for (int64_t m2 = 1; m1 * m2 <= product_limit; ++m2) {
                    if (std::gcd(m1, m2) != 1) continue;
                    ++suite.cases;
                    const int128 joint = f_enumerate(g, m1 * m2, signed_terms);
                    const int128 split =
                        checked_mul(f_enumerate(g, m1, signed_terms), f_enumerate(g, m2, signed_terms));
                    if (joint != split)
                        record_failure(suite, "e=" + std::to_string(g.edge_count()) + " m1=" +
                                                  std::to_string(m1) + " m2=" + std::to_string(m2) +
                                                  ": " + to_string(joint) + " != " + to_string(split));
                }
        }
    }
    return suite;
}

SuiteResult check_coefficient_invariants(int graph_count) {
    SuiteResult suite{.name = "coefficient_invariants"};
    std::mt19937 rng(20240601u);
    for (int i = 0; i < graph_count; ++i) {
        const int v = 1 + int(rng() % 10);
        std::vector<Edge> pool;
        for (int r = 1; r <= v; ++r)
            for (int s = r + 1; s <= v; ++s) pool.push_back({r, s});
        std::shuffle(pool.begin(), pool.end(), rng);
        const int e = pool.empty() ? 0 : int(rng() % (std::min<size_t>(pool.size(), 20) + 1));
        pool.resize(size_t(e));
        const Graph g(v, std::move(pool));

        ++suite.cases;
        const GraphPolynomial qs = compute_polynomial(g, true);
        const GraphPolynomial qp = compute_polynomial(g, false);
        bool ok = qs.coeffs[0] == 1 && qp.coeffs[0] == 1;
        ok = ok && qs.coeffs[1] == 0 && qp.coeffs[1] == 0;
        if (v >= 2) ok = ok && qs.coeffs[2] == -int128(e) && qp.coeffs[2] == int128(e);
        int128 signed_sum = 0, unsigned_sum = 0;
        for (size_t k = 0; k < qs.coeffs.size(); ++k) {
            signed_sum += qs.coeffs[k];
            unsigned_sum += qp.coeffs[k];
        }
        if (e >= 1) ok = ok && signed_sum == 0;
        ok = ok && unsigned_sum == (int128(1) << e);
        if (!ok)
            record_failure(suite, "graph " + std::to_string(i) + " (v=" + std::to_string(v) +
                                      ", e=" + std::to_string(e) + ") breaks a coefficient fact");
    }
    return suite;
}

SuiteResult check_error_ratio(int64_t prime_bound) {
    SuiteResult suite{.name = "error_ratio"};
    const std::pair<const char*, Graph> ladder[] = {
        {"K2", complete_graph(2)},
        {"P3", path_graph(3)},
        {"S4", star_graph(4)},
        {"K3", complete_graph(3)},
    };
    for (const auto& [name, g] : ladder) {
        const DensityEstimate est = density(g, prime_bound);
        std::vector<int64_t> xs = {10, 100, 1000};
        if (g.vertex_count() == 2) xs.push_back(10'000);
        double ratio_at_100 = 0.0, ratio_at_last = 0.0;
        for (int64_t x : xs) {
            ++suite.cases;
            const ErrorDiagnostic diag = error_diagnostic(g, x, est);
            if (!(diag.ratio <= 10.0))
                record_failure(suite, std::string(name) + ": ratio(x=" + std::to_string(x) + ")=" +
                                          fmt1("%.6g exceeds 10", diag.ratio));
            if (x == 100) ratio_at_100 = diag.ratio;
            if (x == xs.back()) ratio_at_last = diag.ratio;
        }
        ++suite.cases;
        if (!(ratio_at_last <= 2.0 * ratio_at_100))
            record_failure(suite, std::string(name) + ": growth check, ratio(x=" +
                                      std::to_string(xs.back()) + ")=" +
                                      fmt2("%.6g > 2*ratio(x=100)=%.6g", ratio_at_last,
                                           2.0 * ratio_at_100));
    }
    return suite;
}

SuiteResult check_density_analytic(int64_t prime_bound) {
    SuiteResult suite{.name = "density_analytic"};
    ++suite.cases;
    const DensityEstimate est = density(complete_graph(2), prime_bound);
    const long double pi = std::numbers::pi_v<long double>;
    const double target = double(6.0L / (pi * pi));
    if (!(std::fabs(est.value - target) <= 1e-6))
        record_failure(suite, fmt2("single-edge density %.12g is not within 1e-6 of %.12g",
                                   est.value, target));
    return suite;
}

std::vector<SuiteResult> run_verify(const VerifyOptions& options) {
    std::vector<SuiteResult> suites;
    suites.push_back(check_counter_agreement(options.max_vertices, options.max_x));
    suites.push_back(check_prime_power_coefficients(options.max_vertices));
    suites.push_back(check_multiplicativity(options.max_vertices, 60));
    suites.push_back(check_coefficient_invariants(200));
    suites.push_back(check_error_ratio(options.prime_bound));
    suites.push_back(check_density_analytic(options.prime_bound));
    return suites;
}

bool all_passed(const std::vector<SuiteResult>& suites) {
    for (const SuiteResult& s : suites)
        if (!s.passed()) return false;
    return true;
}

} // namespace coprime
