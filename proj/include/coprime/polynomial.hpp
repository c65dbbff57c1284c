#pragma once

// The subset-cover polynomials of a constraint graph. For each edge subset F
// let cover(F) be the number of vertices touched by F; then
//
//   signed:    sum over F of (-1)^|F| * t^cover(F)
//   unsigned:  sum over F of             t^cover(F)
//
// Coefficients are exact integers; |c_k| sums to at most 2^e.

#include <vector>

#include "coprime/graph.hpp"
#include "coprime/int128.hpp"

namespace coprime {

struct GraphPolynomial {
    std::vector<int128> coeffs; // coeffs[k] multiplies t^k; size vertex_count+1
    bool is_signed = true;      // true: terms weighted by (-1)^|F|

    int degree_bound() const { return int(coeffs.size()) - 1; }
};

// Dynamic programming over edges with vertex-cover bitmask states, then a
// popcount projection onto coefficients. Refuses graphs whose state count
// exceeds the enumeration cap.
GraphPolynomial compute_polynomial(const Graph& g, bool signed_terms);

// Horner evaluation in extended precision. Coefficients convert exactly:
// |c_k| <= 2^64 fits the 64-bit long double mantissa.
long double eval(const GraphPolynomial& p, long double t);

} // namespace coprime
