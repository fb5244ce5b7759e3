#pragma once

// Maximal cliques, maximal clique trees, separator multisets and the
// reduced clique graph of a chordal graph.
//
// Clique extraction and tree construction run off a single MCS sweep.
// With visit order u_0..u_{n-1} and M(v) = earlier-visited neighbors of v,
// the candidate C(v) = {v} + M(v) fails to be a maximal clique exactly
// when some later vertex y has M(y) = C(v); processing vertices in visit
// order therefore either absorbs v into the clique it completes or anchors
// a new clique, and anchoring attaches the new clique to an existing
// clique containing its separator M(v).

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chordal/graph.hpp"
#include "chordal/search.hpp"
#include "chordal/tree_types.hpp"

namespace chordal {

namespace detail {

struct CliqueSweep {
    std::vector<std::vector<int>> members;  // per clique, insertion order
    std::vector<LabeledEdge> edges;         // creation-time attachments
    std::vector<int> clique_of;             // vertex -> clique completed at its visit
};

// Core sweep shared by maximal_cliques and build_clique_tree. Requires a
// connected graph whose reversed `order` is a simplicial elimination
// scheme (callers gate chordality first).
inline CliqueSweep clique_sweep(const Graph& g, const VertexOrdering& order) {
    int n = g.vertex_count();
    CliqueSweep out;
    out.clique_of.assign(static_cast<size_t>(n), -1);
    std::vector<int> rank(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rank[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;

    // cliques_containing[u]: every clique whose member set currently holds
    // u, in creation order (the clique u completes comes first and is the
    // oldest entry).
    std::vector<std::vector<int>> cliques_containing(static_cast<size_t>(n));
    std::vector<int> stamp(static_cast<size_t>(n), -1);
    std::vector<int> earlier;

    for (int j = 0; j < n; ++j) {
        int v = order[static_cast<size_t>(j)];
        earlier.clear();
        int f = -1;
        for (int w : g.neighbors(v)) {
            if (rank[static_cast<size_t>(w)] < j) {
                earlier.push_back(w);
                if (f == -1 || rank[static_cast<size_t>(w)] > rank[static_cast<size_t>(f)]) f = w;
            }
        }
        if (f == -1) {
            if (j != 0) throw PreconditionError("clique_sweep: graph must be connected");
            out.members.push_back({v});
            out.clique_of[static_cast<size_t>(v)] = 0;
            cliques_containing[static_cast<size_t>(v)].push_back(0);
            continue;
        }
        int c = out.clique_of[static_cast<size_t>(f)];
        if (static_cast<int>(out.members[static_cast<size_t>(c)].size()) ==
            static_cast<int>(earlier.size())) {
            // M(v) equals the current member set of c: v completes it.
            out.members[static_cast<size_t>(c)].push_back(v);
            out.clique_of[static_cast<size_t>(v)] = c;
            cliques_containing[static_cast<size_t>(v)].push_back(c);
            continue;
        }
        // Anchor a new clique on M(v) + v and attach it to the most
        // recently created clique containing the separator M(v). Any
        // clique containing M(v) contains f, so scanning f's list from
        // the newest end finds it; clique_of[f] guarantees a hit.
        for (int w : earlier) stamp[static_cast<size_t>(w)] = j;
        int parent = -1;
        const auto& cand = cliques_containing[static_cast<size_t>(f)];
        for (auto it = cand.rbegin(); it != cand.rend() && parent == -1; ++it) {
            size_t hits = 0;
            for (int u : out.members[static_cast<size_t>(*it)])
                if (stamp[static_cast<size_t>(u)] == j) ++hits;
            if (hits == earlier.size()) parent = *it;
        }
        if (parent == -1) throw InternalError("clique_sweep: no clique contains the separator");

        int nc = static_cast<int>(out.members.size());
        std::vector<int> mem = earlier;
        mem.push_back(v);
        out.members.push_back(std::move(mem));
        out.clique_of[static_cast<size_t>(v)] = nc;
        cliques_containing[static_cast<size_t>(v)].push_back(nc);
        for (int w : earlier) cliques_containing[static_cast<size_t>(w)].push_back(nc);
        out.edges.push_back({parent, nc, VertexSet(earlier)});
    }
    return out;
}

// Chordality gate reusing the MCS order; on failure produces the hole via
// the LexBFS-based certificate path.
inline VertexOrdering chordal_mcs_order(const Graph& g, const char* what) {
    require_connected(g, what);
    if (g.vertex_count() == 0) return {};
    VertexOrdering order = mcs(g, 0);
    VertexOrdering scheme(order.rbegin(), order.rend());
    if (!is_simplicial_elimination_scheme(g, scheme).ok) {
        ChordalityCertificate cert = is_chordal(g);
        if (cert.chordal) throw InternalError("MCS and LexBFS disagree on chordality");
        throw NotChordalError(cert.hole);
    }
    return order;
}

}  // namespace detail

// All maximal cliques of a connected chordal graph, each exactly once, in
// the (deterministic) order the elimination sweep completes them.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
    VertexOrdering order = detail::chordal_mcs_order(g, "maximal_cliques");
    if (g.vertex_count() == 0) return {};
    auto sweep = detail::clique_sweep(g, order);
    std::vector<VertexSet> out;
    out.reserve(sweep.members.size());
    for (auto& mem : sweep.members) out.push_back(VertexSet(std::move(mem)));
    return out;
}

// Maximal clique tree of a connected chordal graph. The sweep attaches
// each new clique to the most recently created clique containing its
// separator, which keeps the per-vertex subtree property by construction.
inline CliqueTree build_clique_tree(const Graph& g) {
    VertexOrdering order = detail::chordal_mcs_order(g, "build_clique_tree");
    CliqueTree t;
    if (g.vertex_count() == 0) return t;
    auto sweep = detail::clique_sweep(g, order);
    t.nodes.reserve(sweep.members.size());
    for (auto& mem : sweep.members) t.nodes.push_back(VertexSet(std::move(mem)));
    t.edges = std::move(sweep.edges);
    return t;
}

inline SeparatorMultiset separator_multiset(const CliqueTree& t) {
    SeparatorMultiset out;
    for (const auto& e : t.edges) ++out[e.label];
    return out;
}

// Reduced clique graph: edge between two maximal cliques iff their
// intersection separates them. One representative pair suffices since
// each side minus the intersection lies in a single component when
// separated at all.
inline ReducedCliqueGraph reduced_clique_graph(const Graph& g) {
    ReducedCliqueGraph r;
    r.nodes = maximal_cliques(g);
    int k = static_cast<int>(r.nodes.size());
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            VertexSet s = r.nodes[static_cast<size_t>(i)].intersect(r.nodes[static_cast<size_t>(j)]);
            if (s.empty()) continue;
            int x = -1, y = -1;
            for (int v : r.nodes[static_cast<size_t>(i)])
                if (!s.contains(v)) {
                    x = v;
                    break;
                }
            for (int v : r.nodes[static_cast<size_t>(j)])
                if (!s.contains(v)) {
                    y = v;
                    break;
                }
            if (x == -1 || y == -1)
                throw InternalError("reduced_clique_graph: nested maximal cliques");
            if (separates(g, s, x, y)) r.edges.push_back({i, j, std::move(s)});
        }
    }
    return r;
}

// Verification report; `violation` names the first failed invariant.
struct TreeVerification {
    bool ok = false;
    std::string violation;
};

// Checks every CliqueTree invariant: node set equals the maximal cliques,
// edges form a tree, labels are endpoint intersections, every vertex's
// cliques induce a subtree, and the total label weight is maximum over
// spanning trees of the clique intersection graph (cycle-exchange
// optimality: no non-tree intersection beats the smallest label on the
// tree path between its endpoints).
inline TreeVerification verify_clique_tree(const Graph& g, const CliqueTree& t) {
    std::vector<VertexSet> want;
    try {
        want = maximal_cliques(g);
    } catch (const NotChordalError&) {
        return {false, "graph is not chordal"};
    } catch (const PreconditionError& e) {
        return {false, e.what()};
    }
    auto sorted_sets = [](std::vector<VertexSet> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted_sets(t.nodes) != sorted_sets(want))
        return {false, "nodes are not the maximal cliques of the graph"};

    int k = static_cast<int>(t.nodes.size());
    if (static_cast<int>(t.edges.size()) != std::max(0, k - 1))
        return {false, "edge count is not (number of cliques - 1)"};
    {
        std::vector<int> parent(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) parent[static_cast<size_t>(i)] = i;
        std::function<int(int)> find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) {
                parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
                x = parent[static_cast<size_t>(x)];
            }
            return x;
        };
        for (const auto& e : t.edges) {
            if (e.a < 0 || e.b < 0 || e.a >= k || e.b >= k || e.a == e.b)
                return {false, "edge endpoints out of range"};
            int ra = find(e.a), rb = find(e.b);
            if (ra == rb) return {false, "edges contain a cycle"};
            parent[static_cast<size_t>(ra)] = rb;
        }
    }

    for (const auto& e : t.edges)
        if (e.label != t.nodes[static_cast<size_t>(e.a)].intersect(t.nodes[static_cast<size_t>(e.b)]))
            return {false, "edge label differs from endpoint intersection"};

    {
        std::vector<int> cliques_with(static_cast<size_t>(g.vertex_count()), 0);
        std::vector<int> edges_with(static_cast<size_t>(g.vertex_count()), 0);
        for (const auto& c : t.nodes)
            for (int v : c) ++cliques_with[static_cast<size_t>(v)];
        for (const auto& e : t.edges)
            for (int v : e.label) ++edges_with[static_cast<size_t>(v)];
        for (int v = 0; v < g.vertex_count(); ++v)
            if (cliques_with[static_cast<size_t>(v)] > 0 &&
                edges_with[static_cast<size_t>(v)] != cliques_with[static_cast<size_t>(v)] - 1)
                return {false, "cliques containing vertex " + std::to_string(v) +
                                   " do not induce a subtree"};
    }

    if (k > 1) {
        // adjacency over the tree
        std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(k));  // (node, label size)
        for (const auto& e : t.edges) {
            adj[static_cast<size_t>(e.a)].push_back({e.b, e.label.size()});
            adj[static_cast<size_t>(e.b)].push_back({e.a, e.label.size()});
        }
        // min label size on the tree path between every pair, by BFS per root
        std::vector<std::vector<int>> pathmin(static_cast<size_t>(k),
                                              std::vector<int>(static_cast<size_t>(k), -1));
        for (int r = 0; r < k; ++r) {
            auto& row = pathmin[static_cast<size_t>(r)];
            row[static_cast<size_t>(r)] = g.vertex_count() + 1;
            std::vector<int> stack{r};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (auto [y, w] : adj[static_cast<size_t>(x)]) {
                    if (row[static_cast<size_t>(y)] != -1) continue;
                    row[static_cast<size_t>(y)] = std::min(row[static_cast<size_t>(x)], w);
                    stack.push_back(y);
                }
            }
        }
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                int w = t.nodes[static_cast<size_t>(i)].intersect(t.nodes[static_cast<size_t>(j)]).size();
                if (w > pathmin[static_cast<size_t>(i)][static_cast<size_t>(j)])
                    return {false, "not a maximum-weight spanning tree (cliques " +
                                       std::to_string(i) + "," + std::to_string(j) + ")"};
            }
    }
    return {true, ""};
}

// ---------------------------------------------------------------------------
// Writers
// ---------------------------------------------------------------------------

namespace detail {

inline std::string clique_display(const Graph& g, const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ",";
        out += g.label(v);
        first = false;
    }
    return out + "}";
}

inline void write_clique_graph_dot(const std::vector<VertexSet>& nodes,
                                   const std::vector<LabeledEdge>& edges, const Graph& g,
                                   std::ostream& out, int highlight_edge) {
    out << "graph cliques {\n  node [shape=box];\n";
    for (size_t i = 0; i < nodes.size(); ++i)
        out << "  n" << i << " [label=\"" << clique_display(g, nodes[i]) << "\"];\n";
    for (size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        out << "  n" << e.a << " -- n" << e.b << " [label=\"" << clique_display(g, e.label)
            << "\"";
        if (static_cast<int>(i) == highlight_edge) out << ", color=red, penwidth=2.5";
        out << "];\n";
    }
    out << "}\n";
}

}  // namespace detail

inline void write_dot(const CliqueTree& t, const Graph& g, std::ostream& out,
                      int highlight_edge = -1) {
    detail::write_clique_graph_dot(t.nodes, t.edges, g, out, highlight_edge);
}

inline void write_dot(const ReducedCliqueGraph& r, const Graph& g, std::ostream& out) {
    detail::write_clique_graph_dot(r.nodes, r.edges, g, out, -1);
}

}  // namespace chordal
