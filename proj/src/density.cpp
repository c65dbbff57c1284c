#include "coprime/density.hpp"

#include <cmath>
#include <cstring>

#include "coprime/int128.hpp"

namespace coprime {

namespace {

constexpr int64_t sieve_limit = 100'000'000;
constexpr int64_t segmented_threshold = 10'000'000;

// Odd-only bitmap: bit i stands for the number 2i+3.
struct OddBitmap {
    std::vector<uint64_t> words;
    explicit OddBitmap(size_t bits) : words((bits + 63) / 64, 0) {}
    bool marked(size_t i) const { return words[i >> 6] >> (i & 63) & 1; }
    void mark(size_t i) { words[i >> 6] |= uint64_t(1) << (i & 63); }
};

void plain_sieve(int64_t bound, PrimeTable& out) {
    if (bound < 3) return;
    const size_t bits = size_t((bound - 3) / 2 + 1);
    OddBitmap composite(bits);
    for (int64_t p = 3; p * p <= bound; p += 2) {
        if (composite.marked(size_t((p - 3) / 2))) continue;
        for (int64_t q = p * p; q <= bound; q += 2 * p) composite.mark(size_t((q - 3) / 2));
    }
    for (size_t i = 0; i < bits; ++i)
        if (!composite.marked(i)) out.primes.push_back(uint32_t(2 * i + 3));
}

void segmented_sieve(int64_t bound, PrimeTable& out) {
    PrimeTable base;
    base.primes.push_back(2);
    int64_t root = int64_t(std::sqrt(double(bound))) + 2;
    plain_sieve(root, base);
    out.primes.push_back(2);

    constexpr int64_t segment_odds = 1 << 21; // odd numbers per segment
    for (int64_t low = 3; low <= bound; low += 2 * segment_odds) {
        const int64_t high = std::min(bound, low + 2 * segment_odds - 2);
        const size_t bits = size_t((high - low) / 2 + 1);
        OddBitmap composite(bits);
        for (size_t pi = 1; pi < base.primes.size(); ++pi) { // skip 2
            const int64_t p = base.primes[pi];
            if (p * p > high) break;
            int64_t start = std::max(p * p, ((low + p - 1) / p) * p);
            if (start % 2 == 0) start += p;
            for (int64_t q = start; q <= high; q += 2 * p) composite.mark(size_t((q - low) / 2));
        }
        for (size_t i = 0; i < bits; ++i)
            if (!composite.marked(i)) out.primes.push_back(uint32_t(low + 2 * int64_t(i)));
    }
}

} // namespace

PrimeTable primes_up_to(int64_t bound) {
    if (bound < 2 || bound > sieve_limit)
        throw domain_error("prime table bound must lie in [2, 10^8], got " + std::to_string(bound));
    PrimeTable out;
    out.bound = bound;
    if (bound <= segmented_threshold) {
        out.primes.push_back(2);
        plain_sieve(bound, out);
    } else {
        segmented_sieve(bound, out);
    }
    return out;
}

double tail_bound(const GraphPolynomial& p, int64_t prime_bound) {
    int128 s = 0;
    for (size_t k = 2; k < p.coeffs.size(); ++k)
        s = checked_add(s, p.coeffs[k] < 0 ? -p.coeffs[k] : p.coeffs[k]);
    if (int128(prime_bound) < checked_mul(int128(2), s))
        throw domain_error("prime bound " + std::to_string(prime_bound) +
                           " is below the tail validity threshold 2*S = " + to_string(2 * s));
    return double(2.0L * (long double)s / (long double)prime_bound);
}

DensityEstimate density(const Graph& g, int64_t prime_bound) {
    if (prime_bound < 2)
        throw domain_error("prime bound must be at least 2, got " + std::to_string(prime_bound));
    const GraphPolynomial poly = compute_polynomial(g, true);

    DensityEstimate est;
    est.prime_bound = prime_bound;
    est.graph_id = canonical_text(g);
    est.tail_bound = tail_bound(poly, prime_bound);

    const PrimeTable table = primes_up_to(prime_bound);

    // Neumaier-compensated sum of log factors, ascending primes.
    long double sum = 0.0L, comp = 0.0L;
    for (uint32_t p : table.primes) {
        const long double q = eval(poly, 1.0L / (long double)p);
        if (!(q > 0.0L))
            throw std::logic_error("internal: non-positive Euler factor at p=" + std::to_string(p));
        const long double term = std::log(q);
        const long double next = sum + term;
        if (std::fabs(sum) >= std::fabs(term))
            comp += (sum - next) + term;
        else
            comp += (term - next) + sum;
        sum = next;
    }
    est.value = double(std::exp(sum + comp));
    est.float_budget = 1e-12 * double(table.primes.size());
    return est;
}

} // namespace coprime
