#pragma once

// Exact counters for g(x), the number of tuples (a_1,...,a_v) with every
// a_r in 1..x and gcd(a_r, a_s) = 1 across every edge {r,s} — computed two
// independent ways:
//
//   bruteforce  depth-first tuple extension with incremental gcd pruning
//   moebius     the exact inclusion-exclusion identity
//               g(x) = sum over squarefree edge values n_a <= x of
//                      mu(n_1)...mu(n_e) * prod_r floor(x / N_r)
//
// plus the asymptotic main term rho_hat * x^v and an error-ratio diagnostic
// against the expected x^(v-1) * (ln x)^d error scale.

#include <cstdint>
#include <string>

#include "coprime/density.hpp"
#include "coprime/graph.hpp"
#include "coprime/int128.hpp"

namespace coprime {

enum class CountMethod { bruteforce, moebius };

const char* to_string(CountMethod m);

struct CountResult {
    int64_t x = 0;
    int128 count = 0;
    CountMethod method = CountMethod::bruteforce;
    std::string graph_id;
};

// Feasibility: x^v <= 10^9 iterations. Partials from a partitioned outer
// loop are exact integers, so any thread count yields the same result.
CountResult count_bruteforce(const Graph& g, int64_t x, int threads = 1);

// Feasibility: at most 2^28 explored enumeration nodes; branches die as soon
// as some vertex lcm exceeds x (their floor factor is 0).
CountResult count_moebius(const Graph& g, int64_t x, int threads = 1);

struct ErrorDiagnostic {
    int64_t x = 0;
    int128 count = 0;           // exact g(x)
    CountMethod method = CountMethod::bruteforce;
    double main_term = 0.0;     // rho_hat * x^v
    double abs_error = 0.0;     // |g(x) - main_term|
    double ratio = 0.0;         // abs_error / (x^(v-1) * (ln x)^d)
};

// rho_hat * x^v; the estimate must have been computed for this graph.
double main_term(const Graph& g, int64_t x, const DensityEstimate& est);

// Runs the cheaper feasible exact counter (falling back to the other one)
// and scales the error by x^(v-1) * (ln x)^d, natural log, d = max degree.
// When d = 0 the denominator is plain x^(v-1). Requires x >= 3.
ErrorDiagnostic error_diagnostic(const Graph& g, int64_t x, const DensityEstimate& est,
                                 int threads = 1);

} // namespace coprime
