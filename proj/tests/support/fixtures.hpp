#pragma once

// Named graphs and helpers shared by the test suites.

#include <algorithm>
#include <set>
#include <vector>

#include "chordal/graph.hpp"

namespace fixtures {

using chordal::Graph;
using chordal::VertexSet;

inline Graph from_edges(int n, std::vector<std::pair<int, int>> edges) {
    return Graph(n, edges);
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

// Star K_{1,leaves} centered at vertex 0.
inline Graph star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

inline Graph claw() { return star(3); }

// a=0, b=1, c=2, d=3, e=4, f=5: K4{a,b,c,d} + triangle {c,d,e} + edge {e,f}.
// Maximal cliques {a,b,c,d}, {c,d,e}, {e,f}; minimal separators {c,d}, {e}.
inline Graph g1() {
    return from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                          {2, 4}, {3, 4}, {4, 5}});
}

inline Graph g1_labeled() {
    return Graph(6,
                 {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}},
                 {"a", "b", "c", "d", "e", "f"});
}

// Three triangles sharing vertex 0.
inline Graph three_triangles() {
    return from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {0, 5}, {0, 6}, {5, 6}});
}

// a=0, b=1, c=2, x=3, y=4, z=5: K4{a,b,c,x} + triangle {a,b,y} + edge {a,z}.
// Minimal separators {a} and {a,b} with {a} properly inside {a,b}.
inline Graph nested_separators() {
    return from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {0, 5}});
}

// Bull: triangle {b,c,d} = {1,2,3} with pendants a=0 on b and e=4 on c.
// Its only reversible orderings are (a,b,d,c,e) and the reverse.
inline Graph bull() {
    return from_edges(5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}});
}

// Net: triangle {0,1,2} with pendants 3-0, 4-1, 5-2.
inline Graph net() {
    return from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
}

// 3-sun: inner triangle {0,1,2}; outer 3 on edge 01, 4 on edge 12, 5 on edge 20.
inline Graph sun3() {
    return from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}});
}

inline std::multiset<VertexSet> as_multiset(const std::vector<VertexSet>& v) {
    return {v.begin(), v.end()};
}

}  // namespace fixtures
