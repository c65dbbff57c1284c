#pragma once

// Arithmetic functions attached to a constraint graph. An edge numbering
// assigns a positive integer n_a to every edge; each vertex r gets
// N_r = lcm of the values on its incident edges (1 for isolated vertices).
// For a target m,
//
//   f(m)        = sum over numberings with prod_r N_r = m of mu(n_1)...mu(n_e)
//   f_plus(m)   = same sum with |mu(n_1)...mu(n_e)|
//
// Both are multiplicative in m, and at prime powers p^k they equal the
// t^k coefficient of the matching subset-cover polynomial. f_enumerate
// computes them straight from the definition; f_multiplicative goes through
// the factorization and the coefficient table. The two routes cross-check
// each other.

#include <cstdint>
#include <vector>

#include "coprime/graph.hpp"
#include "coprime/int128.hpp"
#include "coprime/polynomial.hpp"

namespace coprime {

struct PrimePower {
    int64_t prime = 0;
    int exponent = 0;

    friend bool operator==(const PrimePower& a, const PrimePower& b) {
        return a.prime == b.prime && a.exponent == b.exponent;
    }
};

// Primes strictly increasing, exponents >= 1; empty for m = 1.
using Factorization = std::vector<PrimePower>;

// Trial division against a cached prime table. Supports 1 <= m <= 10^12:
// after removing primes up to 10^6 the remainder is 1 or prime.
Factorization factorize(int64_t m);

// 0 if any exponent is >= 2, else (-1)^(number of primes).
int mobius(const Factorization& f);

// Definitional enumeration. Only squarefree n_a with n_a^2 | m can
// contribute, so candidates are the squarefree divisors built from primes
// appearing in m with exponent >= 2. Branches are pruned once the partial
// vertex-number product exceeds m.
int128 f_enumerate(const Graph& g, int64_t m, bool signed_terms);

// Value at p^k: the coefficient c_k, independent of the prime; 0 past the
// polynomial degree.
int128 f_prime_power(const GraphPolynomial& p, int k);

// Product of f_prime_power over the prime powers of m.
int128 f_multiplicative(const GraphPolynomial& p, int64_t m);

} // namespace coprime
