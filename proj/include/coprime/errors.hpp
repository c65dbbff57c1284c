#pragma once

#include <stdexcept>
#include <string>

namespace coprime {

// Base class for every error this library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Graph file / graph construction problems. Each condition gets its own type
// so callers can tell them apart.
struct parse_error : error {
    using error::error;
};
struct malformed_line_error : parse_error {
    using parse_error::parse_error;
};
struct vertex_range_error : parse_error {
    using parse_error::parse_error;
};
struct self_loop_error : parse_error {
    using parse_error::parse_error;
};
struct duplicate_edge_error : parse_error {
    using parse_error::parse_error;
};

// An enumeration or iteration cap would be exceeded.
struct feasibility_error : error {
    using error::error;
};

// Arguments outside an operation's supported range, or mismatched inputs.
struct domain_error : error {
    using error::error;
};

// A checked 128-bit operation overflowed.
struct overflow_error : error {
    using error::error;
};

} // namespace coprime
