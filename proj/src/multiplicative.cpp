#include "coprime/multiplicative.hpp"

#include <numeric>

#include "coprime/density.hpp"
#include "enumeration_plan.hpp"

namespace coprime {

namespace {

constexpr int64_t factorize_limit = 1'000'000'000'000; // 10^12

const PrimeTable& cached_factor_primes() {
    static const PrimeTable table = primes_up_to(1'000'000);
    return table;
}

} // namespace

Factorization factorize(int64_t m) {
    if (m < 1 || m > factorize_limit)
        throw domain_error("factorize supports 1 <= m <= 10^12, got " + std::to_string(m));
    Factorization out;
    int64_t rem = m;
    for (uint32_t p : cached_factor_primes().primes) {
        if (int64_t(p) * int64_t(p) > rem) break;
        if (rem % int64_t(p) != 0) continue;
        int k = 0;
        while (rem % int64_t(p) == 0) {
            rem /= int64_t(p);
            ++k;
        }
        out.push_back({int64_t(p), k});
    }
    if (rem > 1) out.push_back({rem, 1}); // no factor <= 10^6, so rem is prime
    return out;
}

int mobius(const Factorization& f) {
    for (const PrimePower& pp : f)
        if (pp.exponent >= 2) return 0;
    return f.size() % 2 == 0 ? 1 : -1;
}

namespace {

struct NumberingCandidate {
    int64_t value = 1;
    int sign = 1; // mobius of the value
};

// Squarefree divisors assembled from the primes of m with exponent >= 2;
// no other edge value can contribute (n_a divides two vertex numbers, so
// n_a^2 | m and mu(n_a) != 0 forces this form).
std::vector<NumberingCandidate> numbering_candidates(const Factorization& fac) {
    std::vector<int64_t> base;
    for (const PrimePower& pp : fac)
        if (pp.exponent >= 2) base.push_back(pp.prime);
    std::vector<NumberingCandidate> out;
    out.reserve(size_t(1) << base.size());
    for (uint32_t mask = 0; mask < (uint32_t(1) << base.size()); ++mask) {
        NumberingCandidate c;
        for (size_t i = 0; i < base.size(); ++i)
            if (mask >> i & 1) {
                c.value *= base[i];
                c.sign = -c.sign;
            }
        out.push_back(c);
    }
    return out;
}

struct EdgeNumberingSum {
    const Graph& g;
    const EnumerationPlan plan;
    const std::vector<NumberingCandidate> candidates;
    const int64_t target;
    const bool signed_terms;
    std::vector<int64_t> vertex_lcm;
    int128 total = 0;

    EdgeNumberingSum(const Graph& graph, std::vector<NumberingCandidate> cands, int64_t m,
                     bool use_signs)
        : g(graph),
          plan(make_enumeration_plan(graph)),
          candidates(std::move(cands)),
          target(m),
          signed_terms(use_signs),
          vertex_lcm(size_t(graph.vertex_count()), 1) {}

    void run() { descend(0, 1, 1); }

    void descend(int depth, int sign, int64_t partial) {
        if (depth == g.edge_count()) {
            if (partial == target) total += signed_terms ? sign : 1;
            return;
        }
        const Edge& ed = g.edges()[size_t(plan.edge_order[size_t(depth)])];
        int64_t& lr = vertex_lcm[size_t(ed.r - 1)];
        int64_t& ls = vertex_lcm[size_t(ed.s - 1)];
        const int64_t save_r = lr, save_s = ls;
        for (const NumberingCandidate& c : candidates) {
            lr = std::lcm(save_r, c.value);
            ls = std::lcm(save_s, c.value);
            int64_t next = partial;
            bool dead = false;
            for (int vertex : plan.finalize[size_t(depth)]) {
                next *= vertex_lcm[size_t(vertex - 1)]; // bounded: values <= target <= 10^12
                if (next > target || target % next != 0) {
                    dead = true;
                    break;
                }
            }
            if (!dead) descend(depth + 1, sign * c.sign, next);
        }
        lr = save_r;
        ls = save_s;
    }
};

} // namespace

int128 f_enumerate(const Graph& g, int64_t m, bool signed_terms) {
    Factorization fac = factorize(m); // also validates the range of m
    auto candidates = numbering_candidates(fac);

    // Branch cap: candidate count is a power of two, so compare exponents.
    int candidate_bits = 0;
    while ((size_t(1) << candidate_bits) < candidates.size()) ++candidate_bits;
    if (int64_t(candidate_bits) * g.edge_count() > 24)
        throw feasibility_error("edge-numbering enumeration cap exceeded for m=" + std::to_string(m));

    EdgeNumberingSum sum(g, std::move(candidates), m, signed_terms);
    sum.run();
    return sum.total;
}

int128 f_prime_power(const GraphPolynomial& p, int k) {
    if (k < 0) throw domain_error("prime-power exponent must be non-negative");
    if (size_t(k) >= p.coeffs.size()) return 0;
    return p.coeffs[size_t(k)];
}

int128 f_multiplicative(const GraphPolynomial& p, int64_t m) {
    int128 out = 1;
    for (const PrimePower& pp : factorize(m)) out = checked_mul(out, f_prime_power(p, pp.exponent));
    return out;
}

} // namespace coprime
