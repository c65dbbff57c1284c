#include "coprime/polynomial.hpp"

#include <bit>
#include <cassert>
#include <unordered_map>

namespace coprime {

namespace {

constexpr int128 state_cap = int128(1) << 28;

// 2^n saturated against the cap so the feasibility test cannot overflow.
int128 pow2_capped(int n) {
    if (n >= 120) return state_cap + 1;
    return int128(1) << n;
}

} // namespace

GraphPolynomial compute_polynomial(const Graph& g, bool signed_terms) {
    const int v = g.vertex_count();
    const int e = g.edge_count();

    int128 subset_states = pow2_capped(e);
    int128 dp_states = checked_mul(int128(std::max(e, 1)), pow2_capped(v));
    if (subset_states > state_cap && dp_states > state_cap)
        throw feasibility_error("polynomial enumeration cap exceeded (v=" + std::to_string(v) +
                                ", e=" + std::to_string(e) + ")");

    const int128 sign = signed_terms ? -1 : 1;
    GraphPolynomial out;
    out.is_signed = signed_terms;
    out.coeffs.assign(size_t(v) + 1, 0);

    if (v <= 22) {
        // Dense table over vertex masks. Descending mask order makes each
        // edge's contribution propagate exactly once per state.
        std::vector<int128> acc(size_t(1) << v, 0);
        acc[0] = 1;
        for (int i = 0; i < e; ++i) {
            const uint64_t em = g.edge_mask(i);
            for (uint64_t m = (uint64_t(1) << v); m-- > 0;) {
                if (acc[m] == 0) continue;
                acc[m | em] += sign * acc[m];
            }
        }
        for (uint64_t m = 0; m < (uint64_t(1) << v); ++m)
            if (acc[m] != 0) out.coeffs[size_t(std::popcount(m))] += acc[m];
    } else {
        // Sparse map for wide graphs; the number of live states is bounded by
        // min(2^v, 2^e) but guard its growth anyway.
        constexpr size_t max_live_states = size_t(1) << 24;
        std::unordered_map<uint64_t, int128> acc{{0, 1}};
        for (int i = 0; i < e; ++i) {
            const uint64_t em = g.edge_mask(i);
            std::unordered_map<uint64_t, int128> next = acc;
            for (const auto& [m, c] : acc) next[m | em] += sign * c;
            if (next.size() > max_live_states)
                throw feasibility_error("polynomial enumeration cap exceeded (live states)");
            acc = std::move(next);
        }
        for (const auto& [m, c] : acc)
            if (c != 0) out.coeffs[size_t(std::popcount(m))] += c;
    }

    assert(out.coeffs[0] == 1);
    assert(v < 1 || out.coeffs[1] == 0);
    return out;
}

long double eval(const GraphPolynomial& p, long double t) {
    long double acc = 0.0L;
    for (size_t k = p.coeffs.size(); k-- > 0;) acc = acc * t + (long double)p.coeffs[k];
    return acc;
}

} // namespace coprime
