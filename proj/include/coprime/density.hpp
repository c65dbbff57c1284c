#pragma once

// Prime sieve and certified evaluation of the tuple density
//
//   rho = prod over primes p of Q(1/p),
//
// where Q is the signed subset-cover polynomial of the graph. Each factor
// lies in ((1-1/p)^v, 1], so the log-sum converges like sum 1/p^2.

#include <cstdint>
#include <string>
#include <vector>

#include "coprime/graph.hpp"
#include "coprime/polynomial.hpp"

namespace coprime {

struct PrimeTable {
    int64_t bound = 0;
    std::vector<uint32_t> primes; // ascending, complete up to bound
};

// Bit-packed sieve of Eratosthenes, odd numbers only; switches to a
// segmented walk above 10^7. Supports 2 <= bound <= 10^8.
PrimeTable primes_up_to(int64_t bound);

struct DensityEstimate {
    double value = 1.0;      // prod over p <= prime_bound of Q(1/p)
    int64_t prime_bound = 0; // truncation point P
    double tail_bound = 0.0; // certified bound on |rho - value|, see tail_bound()
    double float_budget = 0.0; // rounding allowance: 1e-12 per factor
    std::string graph_id;    // canonical_text of the graph the estimate is for
};

// Certified truncation bound 2*S/P with S = sum over k>=2 of |c_k|.
// Derivation: for p > P >= 2S, |Q(1/p) - 1| <= S/p^2 <= 1/2, and
// |log(1+u)| <= 2|u| for |u| <= 1/2, so the tail's log magnitude is at most
// 2S * sum_{n>P} n^-2 <= 2S/P. The tail factors are all <= 1, so the product
// can only shrink: |rho - value| <= value * (1 - exp(-2S/P)) <= 2S/P.
// Throws if prime_bound < 2S.
double tail_bound(const GraphPolynomial& p, int64_t prime_bound);

// Truncated Euler product, accumulated as a compensated sum of logs over
// ascending primes and exponentiated once; bit-reproducible run to run.
DensityEstimate density(const Graph& g, int64_t prime_bound);

} // namespace coprime
