#pragma once

// Exact 128-bit integers for coefficients and counts. All arithmetic that can
// grow goes through the checked helpers, which throw instead of wrapping.

#include <cstdint>
#include <string>

#include "coprime/errors.hpp"

namespace coprime {

using int128 = __int128;
using uint128 = unsigned __int128;

inline std::string to_string(int128 value) {
    if (value == 0) return "0";
    bool negative = value < 0;
    // Two's complement: negating INT128_MIN is fine in unsigned arithmetic.
    uint128 mag = negative ? uint128(0) - uint128(value) : uint128(value);
    char buf[48];
    char* p = buf + sizeof(buf);
    while (mag > 0) {
        *--p = char('0' + int(mag % 10));
        mag /= 10;
    }
    if (negative) *--p = '-';
    return std::string(p, buf + sizeof(buf));
}

inline int128 checked_add(int128 a, int128 b) {
    int128 out;
    if (__builtin_add_overflow(a, b, &out)) throw overflow_error("128-bit addition overflow");
    return out;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 out;
    if (__builtin_mul_overflow(a, b, &out)) throw overflow_error("128-bit multiplication overflow");
    return out;
}

inline int128 checked_pow(int128 base, int exponent) {
    int128 out = 1;
    for (int i = 0; i < exponent; ++i) out = checked_mul(out, base);
    return out;
}

} // namespace coprime
