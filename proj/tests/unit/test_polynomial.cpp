#include <doctest.h>

#include <bit>
#include <random>

#include "coprime/polynomial.hpp"

using namespace coprime;

namespace {

// Independent oracle: walk all 2^e edge subsets directly.
GraphPolynomial subset_enumeration_oracle(const Graph& g, bool signed_terms) {
    GraphPolynomial out;
    out.is_signed = signed_terms;
    out.coeffs.assign(size_t(g.vertex_count()) + 1, 0);
    for (uint64_t mask = 0; mask < (uint64_t(1) << g.edge_count()); ++mask) {
        uint64_t covered = 0;
        for (int i = 0; i < g.edge_count(); ++i)
            if (mask >> i & 1) covered |= g.edge_mask(i);
        const int sign = (signed_terms && (std::popcount(mask) & 1)) ? -1 : 1;
        out.coeffs[size_t(std::popcount(covered))] += sign;
    }
    return out;
}

Graph random_graph(std::mt19937& rng, int max_v, int max_e) {
    const int v = 1 + int(rng() % max_v);
    std::vector<Edge> pool;
    for (int r = 1; r <= v; ++r)
        for (int s = r + 1; s <= v; ++s) pool.push_back({r, s});
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min(pool.size(), size_t(rng() % (max_e + 1))));
    return Graph(v, std::move(pool));
}

} // namespace

TEST_CASE("documented coefficient examples") {
    const auto k2 = compute_polynomial(complete_graph(2), true);
    CHECK(k2.coeffs == std::vector<int128>{1, 0, -1});

    const auto k3 = compute_polynomial(complete_graph(3), true);
    CHECK(k3.coeffs == std::vector<int128>{1, 0, -3, 2});

    const auto p3 = compute_polynomial(path_graph(3), true);
    CHECK(p3.coeffs == std::vector<int128>{1, 0, -2, 1});

    const auto k3_plus = compute_polynomial(complete_graph(3), false);
    CHECK(k3_plus.coeffs == std::vector<int128>{1, 0, 3, 4});
    CHECK_FALSE(k3_plus.is_signed);
}

TEST_CASE("evaluation") {
    const auto k2 = compute_polynomial(complete_graph(2), true);
    CHECK(double(eval(k2, 0.5L)) == doctest::Approx(0.75).epsilon(1e-15));
    const auto k3 = compute_polynomial(complete_graph(3), true);
    CHECK(double(eval(k3, 0.5L)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(double(eval(k3, 0.0L)) == 1.0);
}

TEST_CASE("dynamic program agrees with direct subset enumeration") {
    std::mt19937 rng(11u);
    for (int trial = 0; trial < 80; ++trial) {
        const Graph g = random_graph(rng, 8, 12);
        for (bool signed_terms : {true, false}) {
            const auto fast = compute_polynomial(g, signed_terms);
            const auto oracle = subset_enumeration_oracle(g, signed_terms);
            CHECK(fast.coeffs == oracle.coeffs);
        }
    }
}

TEST_CASE("coefficient facts hold on random graphs") {
    std::mt19937 rng(13u);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_graph(rng, 10, 20);
        const int e = g.edge_count();
        const auto qs = compute_polynomial(g, true);
        const auto qp = compute_polynomial(g, false);

        CHECK(qs.coeffs[0] == 1);
        CHECK(qs.coeffs[1] == 0);
        CHECK(qp.coeffs[0] == 1);
        CHECK(qp.coeffs[1] == 0);
        if (g.vertex_count() >= 2) {
            CHECK(qs.coeffs[2] == -int128(e));
            CHECK(qp.coeffs[2] == int128(e));
        }

        int128 signed_sum = 0, unsigned_sum = 0, abs_sum = 0;
        for (size_t k = 0; k < qs.coeffs.size(); ++k) {
            signed_sum += qs.coeffs[k];
            unsigned_sum += qp.coeffs[k];
            abs_sum += qs.coeffs[k] < 0 ? -qs.coeffs[k] : qs.coeffs[k];
            // unsigned coefficients dominate the signed ones
            CHECK((qs.coeffs[k] < 0 ? -qs.coeffs[k] : qs.coeffs[k]) <= qp.coeffs[k]);
        }
        if (e >= 1) CHECK(signed_sum == 0);
        CHECK(unsigned_sum == (int128(1) << e));
        CHECK(abs_sum <= (int128(1) << e));
    }
}

TEST_CASE("value at 1/p matches the residue-tuple fraction exactly") {
    // Q(1/p) * p^v counts residue tuples mod p in which no edge has both
    // endpoints divisible by p. Enumerate those tuples directly.
    for (int v = 1; v <= 4; ++v) {
        std::mt19937 rng(100u + unsigned(v));
        for (int trial = 0; trial < 10; ++trial) {
            const Graph g = random_graph(rng, v, 6);
            const auto q = compute_polynomial(g, true);
            for (int64_t p : {2, 3, 5}) {
                // p^v * Q(1/p) = sum_k c_k p^(v-k), an exact integer
                int128 scaled = 0;
                int128 power = 1;
                for (int k = g.vertex_count(); k >= 0; --k) {
                    scaled += q.coeffs[size_t(k)] * power;
                    power *= p;
                }

                int128 admissible = 0;
                std::vector<int> residue(size_t(g.vertex_count()), 0);
                while (true) {
                    bool ok = true;
                    for (const Edge& ed : g.edges())
                        if (residue[size_t(ed.r - 1)] == 0 && residue[size_t(ed.s - 1)] == 0) {
                            ok = false;
                            break;
                        }
                    if (ok) ++admissible;
                    int i = 0;
                    while (i < g.vertex_count() && ++residue[size_t(i)] == p) residue[size_t(i++)] = 0;
                    if (i == g.vertex_count()) break;
                }
                CHECK(scaled == admissible);

                // positivity floor: at least the all-nonzero assignments
                int128 floor = 1;
                for (int k = 0; k < g.vertex_count(); ++k) floor *= (p - 1);
                CHECK(admissible >= floor);
            }
        }
    }
}

TEST_CASE("enumeration cap refuses oversized graphs") {
    std::vector<Edge> edges;
    for (int s = 2; s <= 31; ++s) edges.push_back({1, s}); // e = 30, v = 64
    const Graph wide(64, std::move(edges));
    CHECK_THROWS_AS(compute_polynomial(wide, true), feasibility_error);
}
