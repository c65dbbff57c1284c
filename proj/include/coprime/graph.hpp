#pragma once

// Constraint graphs: vertices stand for tuple coordinates, an edge {r,s}
// demands gcd(a_r, a_s) = 1. Vertices are 1-based everywhere a caller can
// see them. Graphs are immutable once constructed and safe to share.

#include <cstdint>
#include <string>
#include <vector>

#include "coprime/errors.hpp"

namespace coprime {

struct Edge {
    int r = 0; // smaller endpoint after canonicalization
    int s = 0;

    friend bool operator==(const Edge& a, const Edge& b) { return a.r == b.r && a.s == b.s; }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.r != b.r ? a.r < b.r : a.s < b.s;
    }
};

class Graph {
public:
    // v and e are capped at 64 so vertex sets and edge sets fit in one
    // machine word; the enumerations running on top are exponential in
    // them anyway.
    static constexpr int max_vertices = 64;
    static constexpr int max_edges = 64;

    // Validates, canonicalizes each edge to (min,max), sorts, rejects
    // self-loops / out-of-range endpoints / duplicates.
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return v_; }
    int edge_count() const { return int(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    int degree(int r) const { return degrees_[size_t(r - 1)]; } // r in 1..v
    const std::vector<int>& degrees() const { return degrees_; }
    int max_degree() const { return max_degree_; }

    // Bitmask over vertices (bit r-1) of edge i's endpoints.
    uint64_t edge_mask(int i) const {
        const Edge& e = edges_[size_t(i)];
        return (uint64_t(1) << (e.r - 1)) | (uint64_t(1) << (e.s - 1));
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.v_ == b.v_ && a.edges_ == b.edges_;
    }

private:
    int v_;
    std::vector<Edge> edges_; // sorted, each with r < s
    std::vector<int> degrees_;
    int max_degree_ = 0;
};

// Graph file format: first non-comment line is the vertex count, every
// further non-comment line is "r s". Blank lines and lines starting with
// '#' are ignored. Throws the parse_error subclasses with line numbers.
Graph parse_graph(const std::string& text);

// Canonical file-format serialization; parse_graph(canonical_text(g)) == g.
std::string canonical_text(const Graph& g);

// Small builders used by the verification suites and tests.
Graph edgeless_graph(int v);
Graph complete_graph(int v);
Graph path_graph(int v);
Graph star_graph(int v); // vertex 1 is the center

} // namespace coprime
