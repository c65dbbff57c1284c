#pragma once

// Machine checks of the identities the library is built on, runnable from
// the CLI (`verify`) and reused by the acceptance harness. Each suite
// reports how many cases it checked and how many failed.

#include <cstdint>
#include <string>
#include <vector>

namespace coprime {

struct SuiteResult {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    std::string note; // first failure, empty when clean

    bool passed() const { return failures == 0; }
};

struct VerifyOptions {
    int max_vertices = 4;
    int64_t max_x = 40;
    int64_t prime_bound = 1'000'000;
};

// Both exact counters agree on every edge subset of the complete graph on
// max_vertices, for every x in 1..max_x.
SuiteResult check_counter_agreement(int max_vertices, int64_t max_x);

// f(p^k) from definitional enumeration equals the polynomial coefficient
// c_k, for p in {2,3,5}, k in 0..v, both variants, all edge subsets.
SuiteResult check_prime_power_coefficients(int max_vertices);

// f(m1*m2) = f(m1)*f(m2) for coprime m1, m2 with m1*m2 <= product_limit.
SuiteResult check_multiplicativity(int max_vertices, int64_t product_limit);

// Coefficient facts over deterministic pseudorandom graphs (v <= 10,
// e <= 20): c_0 = 1, c_1 = 0, c_2 = -e / +e, signed coefficients sum to 0
// when e >= 1, unsigned coefficients sum to 2^e.
SuiteResult check_coefficient_invariants(int graph_count);

// Error-term scale check on the fixed graph ladder (single edge, 3-vertex
// path, 4-vertex star, triangle): every ratio <= 10 at x in {10,100,1000}
// (plus 10^4 when v = 2), and the ratio at the largest x at most doubles
// the ratio at x = 100.
SuiteResult check_error_ratio(int64_t prime_bound);

// Single-edge density against the analytic value 6/pi^2.
SuiteResult check_density_analytic(int64_t prime_bound);

std::vector<SuiteResult> run_verify(const VerifyOptions& options);
bool all_passed(const std::vector<SuiteResult>& suites);

} // namespace coprime
