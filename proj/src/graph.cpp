#include "coprime/graph.hpp"

#include <algorithm>
#include <sstream>

namespace coprime {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : v_(vertex_count), edges_(std::move(edges)) {
    if (v_ < 1) throw domain_error("vertex count must be positive");
    if (v_ > max_vertices)
        throw domain_error("vertex count " + std::to_string(v_) + " exceeds the limit of " +
                           std::to_string(max_vertices));
    if (edges_.size() > size_t(max_edges))
        throw domain_error("edge count " + std::to_string(edges_.size()) +
                           " exceeds the limit of " + std::to_string(max_edges));

    for (Edge& e : edges_) {
        if (e.r > e.s) std::swap(e.r, e.s);
        if (e.r < 1 || e.s > v_)
            throw vertex_range_error("edge {" + std::to_string(e.r) + "," + std::to_string(e.s) +
                                     "} has an endpoint outside 1.." + std::to_string(v_));
        if (e.r == e.s)
            throw self_loop_error("self-loop at vertex " + std::to_string(e.r));
    }
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1])
            throw duplicate_edge_error("duplicate edge {" + std::to_string(edges_[i].r) + "," +
                                       std::to_string(edges_[i].s) + "}");

    degrees_.assign(size_t(v_), 0);
    for (const Edge& e : edges_) {
        ++degrees_[size_t(e.r - 1)];
        ++degrees_[size_t(e.s - 1)];
    }
    for (int d : degrees_) max_degree_ = std::max(max_degree_, d);
}

namespace {

// Strips comments ('#' onward applies only when it starts the line) and
// surrounding whitespace; returns false for lines to skip.
bool significant_line(const std::string& raw, std::string& out) {
    size_t b = raw.find_first_not_of(" \t\r");
    if (b == std::string::npos) return false;
    if (raw[b] == '#') return false;
    size_t e = raw.find_last_not_of(" \t\r");
    out = raw.substr(b, e - b + 1);
    return true;
}

long long parse_integer_token(const std::string& tok, int lineno, const char* what) {
    size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != tok.size())
        throw malformed_line_error("line " + std::to_string(lineno) + ": expected " + what +
                                   ", got '" + tok + "'");
    return value;
}

} // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string raw, line;
    int lineno = 0;
    bool have_v = false;
    long long v = 0;
    std::vector<Edge> edges;

    while (std::getline(in, raw)) {
        ++lineno;
        if (!significant_line(raw, line)) continue;
        std::istringstream fields(line);
        std::string tok1, tok2, extra;
        if (!have_v) {
            fields >> tok1;
            if (fields >> extra)
                throw malformed_line_error("line " + std::to_string(lineno) +
                                           ": vertex count line must hold a single integer");
            v = parse_integer_token(tok1, lineno, "the vertex count");
            if (v < 1)
                throw malformed_line_error("line " + std::to_string(lineno) +
                                           ": vertex count must be positive");
            if (v > Graph::max_vertices)
                throw domain_error("line " + std::to_string(lineno) + ": vertex count " +
                                   std::to_string(v) + " exceeds the limit of " +
                                   std::to_string(Graph::max_vertices));
            have_v = true;
            continue;
        }
        if (!(fields >> tok1 >> tok2) || (fields >> extra))
            throw malformed_line_error("line " + std::to_string(lineno) +
                                       ": edge line must hold exactly two integers");
        long long r = parse_integer_token(tok1, lineno, "a vertex index");
        long long s = parse_integer_token(tok2, lineno, "a vertex index");
        if (r < 1 || r > v || s < 1 || s > v)
            throw vertex_range_error("line " + std::to_string(lineno) + ": vertex index outside 1.." +
                                     std::to_string(v));
        if (r == s)
            throw self_loop_error("line " + std::to_string(lineno) + ": self-loop at vertex " +
                                  std::to_string(r));
        Edge e{int(std::min(r, s)), int(std::max(r, s))};
        for (const Edge& prev : edges)
            if (prev == e)
                throw duplicate_edge_error("line " + std::to_string(lineno) + ": duplicate edge {" +
                                           std::to_string(e.r) + "," + std::to_string(e.s) + "}");
        if (edges.size() >= size_t(Graph::max_edges))
            throw domain_error("line " + std::to_string(lineno) + ": edge count exceeds the limit of " +
                               std::to_string(Graph::max_edges));
        edges.push_back(e);
    }
    if (!have_v) throw malformed_line_error("graph text holds no vertex count line");
    return Graph(int(v), std::move(edges));
}

std::string canonical_text(const Graph& g) {
    std::string out = std::to_string(g.vertex_count());
    out += '\n';
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.r);
        out += ' ';
        out += std::to_string(e.s);
        out += '\n';
    }
    return out;
}

Graph edgeless_graph(int v) { return Graph(v, {}); }

Graph complete_graph(int v) {
    std::vector<Edge> edges;
    for (int r = 1; r <= v; ++r)
        for (int s = r + 1; s <= v; ++s) edges.push_back({r, s});
    return Graph(v, std::move(edges));
}

Graph path_graph(int v) {
    std::vector<Edge> edges;
    for (int r = 1; r < v; ++r) edges.push_back({r, r + 1});
    return Graph(v, std::move(edges));
}

Graph star_graph(int v) {
    std::vector<Edge> edges;
    for (int s = 2; s <= v; ++s) edges.push_back({1, s});
    return Graph(v, std::move(edges));
}

} // namespace coprime
