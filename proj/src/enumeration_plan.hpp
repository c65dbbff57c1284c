#pragma once

// Shared scaffolding for depth-first enumeration over edge numberings.
// Edges are visited in a connectivity-greedy order so that vertex lcms
// close early and pruning bites; the result is order-independent.

#include <vector>

#include "coprime/graph.hpp"

namespace coprime {

struct EnumerationPlan {
    std::vector<int> edge_order;            // indices into g.edges()
    std::vector<std::vector<int>> finalize; // per step: vertices whose lcm is final
    std::vector<int> isolated;              // degree-0 vertices
};

inline EnumerationPlan make_enumeration_plan(const Graph& g) {
    const int e = g.edge_count();
    EnumerationPlan plan;
    plan.edge_order.reserve(size_t(e));
    plan.finalize.assign(size_t(e), {});

    std::vector<bool> used(size_t(e), false);
    uint64_t covered = 0;
    for (int step = 0; step < e; ++step) {
        int pick = -1;
        for (int i = 0; i < e; ++i) {
            if (used[size_t(i)]) continue;
            if (g.edge_mask(i) & covered) {
                pick = i;
                break;
            }
            if (pick < 0) pick = i; // fallback: first edge of a fresh component
        }
        used[size_t(pick)] = true;
        covered |= g.edge_mask(pick);
        plan.edge_order.push_back(pick);
    }

    std::vector<int> remaining(g.degrees());
    for (int step = 0; step < e; ++step) {
        const Edge& ed = g.edges()[size_t(plan.edge_order[size_t(step)])];
        for (int vertex : {ed.r, ed.s})
            if (--remaining[size_t(vertex - 1)] == 0) plan.finalize[size_t(step)].push_back(vertex);
    }
    for (int r = 1; r <= g.vertex_count(); ++r)
        if (g.degree(r) == 0) plan.isolated.push_back(r);
    return plan;
}

} // namespace coprime
