#pragma once

// Plain data types shared by the clique-tree algorithms and the
// brute-force oracle. Deliberately algorithm-free: the oracle must not
// share computational code with the implementations it cross-checks.

#include <map>
#include <vector>

#include "chordal/graph.hpp"

namespace chordal {

struct LabeledEdge {
    int a = -1;
    int b = -1;
    VertexSet label;

    friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

// Tree on the maximal cliques of a chordal graph. Edge labels are the
// intersections of their endpoint cliques (the minimal separators).
struct CliqueTree {
    std::vector<VertexSet> nodes;
    std::vector<LabeledEdge> edges;
};

// Graph on the maximal cliques with an edge exactly when the intersection
// of the endpoints separates them.
struct ReducedCliqueGraph {
    std::vector<VertexSet> nodes;
    std::vector<LabeledEdge> edges;
};

// Multiset of the separator labels of a clique tree.
using SeparatorMultiset = std::map<VertexSet, int>;

// Canonical form for structure comparisons: endpoints ordered, edges
// sorted. Node order is left untouched (node indices are meaningful).
inline void canonicalize_edges(std::vector<LabeledEdge>& edges) {
    for (auto& e : edges)
        if (e.a > e.b) std::swap(e.a, e.b);
    std::sort(edges.begin(), edges.end(), [](const LabeledEdge& x, const LabeledEdge& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
}

inline long long total_label_weight(const std::vector<LabeledEdge>& edges) {
    long long w = 0;
    for (const auto& e : edges) w += e.label.size();
    return w;
}

}  // namespace chordal
