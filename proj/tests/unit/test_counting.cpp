#include <doctest.h>

#include <cmath>

#include "coprime/counting.hpp"
#include "coprime/verify.hpp"

using namespace coprime;

namespace {

int128 big(long long v) { return int128(v); }

} // namespace

TEST_CASE("bruteforce on documented cases") {
    CHECK(count_bruteforce(complete_graph(2), 10).count == 63);
    CHECK(count_bruteforce(complete_graph(2), 1).count == 1);
    CHECK(count_bruteforce(complete_graph(3), 2).count == 4);
    CHECK(count_bruteforce(edgeless_graph(2), 7).count == 49);
}

TEST_CASE("moebius on documented cases") {
    CHECK(count_moebius(complete_graph(2), 10).count == 63);
    CHECK(count_moebius(complete_graph(3), 2).count == 4);
    for (const Graph& g : {complete_graph(4), star_graph(4), path_graph(3)})
        CHECK(count_moebius(g, 1).count == 1);
}

TEST_CASE("counters agree on every small graph") {
    const SuiteResult suite = check_counter_agreement(4, 10);
    CHECK(suite.cases == 64 * 10);
    CHECK(suite.failures == 0);
}

TEST_CASE("counts frozen from independent computation") {
    // Values computed two unrelated ways (coprime-count convolutions and a
    // bitset intersection count) before this module existed.
    const Graph k2 = complete_graph(2);
    CHECK(count_moebius(k2, 100).count == 6087);
    CHECK(count_moebius(k2, 1000).count == 608383);
    CHECK(count_moebius(k2, 10'000).count == 60794971);

    const Graph p3 = path_graph(3);
    CHECK(count_moebius(p3, 10).count == 443);
    CHECK(count_moebius(p3, 100).count == 427315);
    CHECK(count_moebius(p3, 1000).count == big(428724847));

    const Graph s4 = star_graph(4);
    CHECK(count_bruteforce(s4, 10).count == 3393);
    CHECK(count_moebius(s4, 10).count == 3393);
    CHECK(count_moebius(s4, 100).count == big(33489585));
    CHECK(count_moebius(s4, 1000).count == big(337707076483));

    const Graph k3 = complete_graph(3);
    CHECK(count_moebius(k3, 10).count == 280);
    CHECK(count_moebius(k3, 100).count == big(282814));
    CHECK(count_moebius(k3, 1000).count == big(286984546));
    CHECK(count_bruteforce(k3, 300).count == big(7749532));

    const Graph p4 = path_graph(4);
    CHECK(count_bruteforce(p4, 30).count == big(237876));
    CHECK(count_moebius(p4, 30).count == big(237876));
    CHECK(count_moebius(p4, 100).count == big(28525216));
}

TEST_CASE("monotone in x and bounded by x^v") {
    const Graph k3 = complete_graph(3);
    int128 prev = 0;
    for (int64_t x = 1; x <= 20; ++x) {
        const int128 g = count_bruteforce(k3, x).count;
        CHECK(g >= prev);
        CHECK(g <= checked_pow(x, 3));
        prev = g;
    }
    CHECK(count_moebius(edgeless_graph(3), 13).count == 2197);
}

TEST_CASE("relabeling vertices leaves counts unchanged") {
    // star centered at 1 vs star centered at 3
    const Graph star_a = star_graph(4);
    const Graph star_b(4, {{1, 3}, {2, 3}, {3, 4}});
    CHECK(count_bruteforce(star_a, 12).count == count_bruteforce(star_b, 12).count);
    CHECK(count_moebius(star_a, 50).count == count_moebius(star_b, 50).count);

    // path 1-2-3 vs path 1-3-2
    const Graph path_a = path_graph(3);
    const Graph path_b(3, {{1, 3}, {2, 3}});
    CHECK(count_moebius(path_a, 60).count == count_moebius(path_b, 60).count);
}

TEST_CASE("thread partitioning changes nothing") {
    const Graph k3 = complete_graph(3);
    CHECK(count_bruteforce(k3, 150, 1).count == count_bruteforce(k3, 150, 8).count);
    const Graph s4 = star_graph(4);
    CHECK(count_moebius(s4, 400, 1).count == count_moebius(s4, 400, 8).count);
    const Graph k2 = complete_graph(2);
    CHECK(count_moebius(k2, 5000, 1).count == count_moebius(k2, 5000, 7).count);
}

TEST_CASE("feasibility guards") {
    CHECK_THROWS_AS(count_bruteforce(complete_graph(4), 200), feasibility_error); // 200^4 > 1e9
    CHECK_THROWS_AS(count_moebius(edgeless_graph(64), 10), feasibility_error);    // 10^64 overflows
    CHECK_THROWS_AS(count_bruteforce(complete_graph(2), 0), domain_error);
}

TEST_CASE("main term") {
    const Graph empty2 = edgeless_graph(2);
    const DensityEstimate unit = density(empty2, 100);
    CHECK(main_term(empty2, 10, unit) == 100.0);

    const Graph k2 = complete_graph(2);
    const DensityEstimate est = density(k2, 1'000'000);
    CHECK(main_term(k2, 1000, est) == doctest::Approx(607927.14).epsilon(1e-6));
    CHECK(main_term(k2, 1, est) == doctest::Approx(0.6079271).epsilon(1e-6));
    CHECK_THROWS_AS(main_term(complete_graph(3), 10, est), domain_error); // wrong graph
}

TEST_CASE("error diagnostic") {
    const Graph empty2 = edgeless_graph(2);
    const DensityEstimate unit = density(empty2, 100);
    const ErrorDiagnostic zero = error_diagnostic(empty2, 10, unit);
    CHECK(zero.abs_error == 0.0);
    CHECK(zero.ratio == 0.0);

    const Graph k2 = complete_graph(2);
    const DensityEstimate est = density(k2, 1'000'000);
    const ErrorDiagnostic diag = error_diagnostic(k2, 100, est);
    CHECK(diag.count == 6087);
    // |6087 - 6079.27| / (100 * ln 100)
    CHECK(diag.ratio == doctest::Approx(0.016782).epsilon(1e-3));
    CHECK(diag.ratio > 0.0);
    CHECK(diag.ratio <= 10.0);

    CHECK_THROWS_AS(error_diagnostic(k2, 2, est), domain_error); // x >= 3
    CHECK_THROWS_AS(error_diagnostic(complete_graph(3), 10, est), domain_error);
}

TEST_CASE("error ratio stays bounded on the standard ladder") {
    // The bounded-ratio invariant: single edge, triangle, 4-vertex path,
    // 4-vertex star; x in {10, 100, 1000}, plus 10^4 where the squarefree
    // branch bound allows it (v = 2 only).
    const std::pair<const char*, Graph> ladder[] = {
        {"K2", complete_graph(2)},
        {"K3", complete_graph(3)},
        {"P4", path_graph(4)},
        {"S4", star_graph(4)},
    };
    for (const auto& [name, g] : ladder) {
        CAPTURE(name);
        const DensityEstimate est = density(g, 1'000'000);
        std::vector<int64_t> xs = {10, 100, 1000};
        if (g.vertex_count() == 2) xs.push_back(10'000);
        double at100 = 0.0, last = 0.0;
        for (int64_t x : xs) {
            const ErrorDiagnostic diag = error_diagnostic(g, x, est);
            CHECK(diag.ratio <= 10.0);
            if (x == 100) at100 = diag.ratio;
            last = diag.ratio;
        }
        CHECK(last <= 2.0 * at100);
    }
}
