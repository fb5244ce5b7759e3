#pragma once

// Min-max separator machinery: the separator containment poset, the
// chain-reduction edge exchange, construction of a clique tree with a
// pending edge labelled by an inclusion-maximal minimal separator, the
// containment-order elimination scheme, and the counterexample searches
// for the classical-search failure phenomena.
//
// Terminology used throughout: min-max separator = minimal separator that
// is maximal under inclusion among all minimal separators; min-min =
// minimal under inclusion.

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "chordal/clique_tree.hpp"
#include "chordal/graph.hpp"
#include "chordal/search.hpp"
#include "chordal/tree_types.hpp"

namespace chordal {

// ---------------------------------------------------------------------------
// Separator poset
// ---------------------------------------------------------------------------

struct SeparatorPoset {
    std::vector<VertexSet> separators;        // distinct, ascending
    std::vector<int> multiplicity;            // parallel to separators
    std::vector<std::pair<int, int>> hasse;   // (subset, superset) covers
    std::vector<char> is_min_max;             // no proper superset present
    std::vector<char> is_min_min;             // no proper subset present

    int find(const VertexSet& s) const {
        auto it = std::lower_bound(separators.begin(), separators.end(), s);
        if (it == separators.end() || *it != s) return -1;
        return static_cast<int>(it - separators.begin());
    }
};

// Containment poset over the distinct separator labels of a clique tree
// of g, with multiplicities and min-max / min-min flags.
inline SeparatorPoset separator_poset(const Graph& g) {
    SeparatorPoset p;
    SeparatorMultiset ms = separator_multiset(build_clique_tree(g));
    for (auto& [s, count] : ms) {
        p.separators.push_back(s);
        p.multiplicity.push_back(count);
    }
    int d = static_cast<int>(p.separators.size());
    std::vector<std::vector<char>> below(static_cast<size_t>(d),
                                         std::vector<char>(static_cast<size_t>(d), 0));
    p.is_min_max.assign(static_cast<size_t>(d), 1);
    p.is_min_min.assign(static_cast<size_t>(d), 1);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            if (p.separators[static_cast<size_t>(i)].is_proper_subset_of(
                    p.separators[static_cast<size_t>(j)])) {
                below[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
                p.is_min_max[static_cast<size_t>(i)] = 0;
                p.is_min_min[static_cast<size_t>(j)] = 0;
            }
        }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (!below[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
            bool cover = true;
            for (int l = 0; l < d && cover; ++l)
                if (below[static_cast<size_t>(i)][static_cast<size_t>(l)] &&
                    below[static_cast<size_t>(l)][static_cast<size_t>(j)])
                    cover = false;
            if (cover) p.hasse.emplace_back(i, j);
        }
    return p;
}

// ---------------------------------------------------------------------------
// Chain reduction
// ---------------------------------------------------------------------------

// Single chain-reduction step on clique tree `t`: given a tree edge ab
// (index `edge_ab`) with label S and the side of endpoint `side_node`,
// finds a leaf edge xy on that side (y a leaf of t) whose label S' is
// contained in S, and re-attaches y next to the other endpoint b,
// exchanging xy for by. Weight and label multiset are preserved, so the
// result is again a maximal clique tree; this is verified before return.
inline CliqueTree chain_reduction(const CliqueTree& t, const ReducedCliqueGraph& rcg, int edge_ab,
                                  int side_node, const Graph& g) {
    int k = static_cast<int>(t.nodes.size());
    if (edge_ab < 0 || edge_ab >= static_cast<int>(t.edges.size()))
        throw PreconditionError("chain_reduction: edge index out of range");
    const LabeledEdge& ab = t.edges[static_cast<size_t>(edge_ab)];
    if (side_node != ab.a && side_node != ab.b)
        throw PreconditionError("chain_reduction: side must be an endpoint of the edge");
    int a = side_node;
    int b = (side_node == ab.a) ? ab.b : ab.a;

    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(k));  // (node, edge idx)
    for (size_t i = 0; i < t.edges.size(); ++i) {
        adj[static_cast<size_t>(t.edges[i].a)].push_back({t.edges[i].b, static_cast<int>(i)});
        adj[static_cast<size_t>(t.edges[i].b)].push_back({t.edges[i].a, static_cast<int>(i)});
    }
    // side of a in t - ab
    std::vector<char> in_side(static_cast<size_t>(k), 0);
    {
        std::vector<int> stack{a};
        in_side[static_cast<size_t>(a)] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [y, e] : adj[static_cast<size_t>(x)]) {
                if (e == edge_ab || in_side[static_cast<size_t>(y)]) continue;
                in_side[static_cast<size_t>(y)] = 1;
                stack.push_back(y);
            }
        }
    }
    // leaf edges xy of the side with label inside S, y the pending clique
    int pick_edge = -1, pick_leaf = -1;
    for (int y = 0; y < k; ++y) {
        if (!in_side[static_cast<size_t>(y)] || y == a) continue;
        if (adj[static_cast<size_t>(y)].size() != 1) continue;
        auto [x, e] = adj[static_cast<size_t>(y)][0];
        (void)x;
        if (!t.edges[static_cast<size_t>(e)].label.is_subset_of(ab.label)) continue;
        if (pick_leaf == -1 || y < pick_leaf) {
            pick_leaf = y;
            pick_edge = e;
        }
    }
    if (pick_edge == -1)
        throw PreconditionError(
            "chain_reduction: designated side has no leaf edge with label inside the separator");

    CliqueTree out = t;
    LabeledEdge& moved = out.edges[static_cast<size_t>(pick_edge)];
    int y = pick_leaf;
    moved.a = b;
    moved.b = y;
    moved.label = out.nodes[static_cast<size_t>(b)].intersect(out.nodes[static_cast<size_t>(y)]);
    if (moved.label != t.edges[static_cast<size_t>(pick_edge)].label)
        throw InternalError("chain_reduction: exchanged edge changed its separator");
    bool in_rcg = false;
    for (const auto& e : rcg.edges)
        if ((e.a == b && e.b == y) || (e.a == y && e.b == b)) in_rcg = true;
    if (!in_rcg) throw InternalError("chain_reduction: replacement edge not in the reduced clique graph");

    TreeVerification v = verify_clique_tree(g, out);
    if (!v.ok) throw InternalError("chain_reduction: result is not a valid clique tree: " + v.violation);
    return out;
}

// ---------------------------------------------------------------------------
// Pending min-max tree
// ---------------------------------------------------------------------------

struct EdgeExchange {
    std::pair<int, int> removed;  // node indices
    std::pair<int, int> added;
};

struct PendingTreeResult {
    CliqueTree tree;
    // Index into tree.edges, or empty when the graph has a single maximal
    // clique and therefore no separators.
    std::optional<int> pending_edge;
    int leaf_node = -1;
    std::vector<EdgeExchange> transform_log;
    long traversals = 0;
    int restarts = 0;

    bool no_separators() const { return !pending_edge.has_value(); }
};

// Clique tree with a pending edge labelled by a min-max separator.
// Strategy, following the constructive argument: start from an edge whose
// label has maximum size (such a label is inclusion-maximal), explore one
// side without descending past edges whose labels leave S; if the side is
// clean (every label inside S) flatten it onto the far endpoint by chain
// reductions, otherwise recurse on the largest label that left S. Every
// tree edge is visited at most twice (once while walking, once while
// flattening), which keeps the whole transformation linear.
inline PendingTreeResult pending_minmax_tree(const Graph& g) {
    PendingTreeResult res;
    res.tree = build_clique_tree(g);
    int k = static_cast<int>(res.tree.nodes.size());
    if (k <= 1) return res;

    auto& edges = res.tree.edges;
    int n = g.vertex_count();

    // Distinct labels, for the inclusion-maximality check of the result.
    std::vector<VertexSet> distinct;
    distinct.reserve(edges.size());
    for (const auto& e : edges) distinct.push_back(e.label);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<int> stamp(static_cast<size_t>(n), -1);
    int stamp_round = 0;
    auto stamp_set = [&](const VertexSet& s) {
        ++stamp_round;
        for (int v : s) stamp[static_cast<size_t>(v)] = stamp_round;
    };
    auto stamped_subset = [&](const VertexSet& s) {
        for (int v : s)
            if (stamp[static_cast<size_t>(v)] != stamp_round) return false;
        return true;
    };

    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(k));  // (node, edge idx)
    auto rebuild_adjacency = [&]() {
        for (auto& l : adj) l.clear();
        for (size_t i = 0; i < edges.size(); ++i) {
            adj[static_cast<size_t>(edges[i].a)].push_back({edges[i].b, static_cast<int>(i)});
            adj[static_cast<size_t>(edges[i].b)].push_back({edges[i].a, static_cast<int>(i)});
        }
    };
    rebuild_adjacency();

    auto better_label = [](const VertexSet& cand, const VertexSet& best) {
        if (cand.size() != best.size()) return cand.size() > best.size();
        return cand < best;
    };
    auto pick_start_edge = [&](const VertexSet* forced_label) {
        int best = -1;
        for (size_t i = 0; i < edges.size(); ++i) {
            if (forced_label) {
                if (edges[i].label == *forced_label) return static_cast<int>(i);
                continue;
            }
            if (best == -1 || better_label(edges[i].label, edges[static_cast<size_t>(best)].label))
                best = static_cast<int>(i);
        }
        return best;
    };

    int cur = pick_start_edge(nullptr);
    int explore_root = std::min(edges[static_cast<size_t>(cur)].a, edges[static_cast<size_t>(cur)].b);
    int rounds = 0;

    std::vector<int> order_nodes;      // preorder of the pruned walk
    std::vector<int> parent_edge(static_cast<size_t>(k), -1);

    for (;;) {
        if (++rounds > 2 * k + 2)
            throw InternalError("pending_minmax_tree: transformation failed to terminate");
        const VertexSet S = edges[static_cast<size_t>(cur)].label;
        int other = edges[static_cast<size_t>(cur)].a == explore_root
                        ? edges[static_cast<size_t>(cur)].b
                        : edges[static_cast<size_t>(cur)].a;
        stamp_set(S);

        order_nodes.clear();
        order_nodes.push_back(explore_root);
        parent_edge[static_cast<size_t>(explore_root)] = -1;
        int frontier_edge = -1, frontier_far = -1;
        for (size_t at = 0; at < order_nodes.size(); ++at) {
            int x = order_nodes[at];
            for (auto [y, e] : adj[static_cast<size_t>(x)]) {
                if (e == cur || e == parent_edge[static_cast<size_t>(x)]) continue;
                ++res.traversals;
                const VertexSet& L = edges[static_cast<size_t>(e)].label;
                bool inside = L.size() <= S.size() && stamped_subset(L);
                if (inside) {
                    parent_edge[static_cast<size_t>(y)] = e;
                    order_nodes.push_back(y);
                } else if (frontier_edge == -1 ||
                           better_label(L, edges[static_cast<size_t>(frontier_edge)].label) ||
                           (L == edges[static_cast<size_t>(frontier_edge)].label && e < frontier_edge)) {
                    frontier_edge = e;
                    frontier_far = y;
                }
            }
        }

        if (frontier_edge != -1) {
            cur = frontier_edge;
            explore_root = frontier_far;
            continue;
        }

        // Clean side: flatten everything (except the root) onto `other` by
        // leaf re-attachments, deepest nodes first.
        for (size_t i = order_nodes.size(); i-- > 1;) {
            int y = order_nodes[i];
            int e = parent_edge[static_cast<size_t>(y)];
            ++res.traversals;
            int p = edges[static_cast<size_t>(e)].a == y ? edges[static_cast<size_t>(e)].b
                                                         : edges[static_cast<size_t>(e)].a;
            res.transform_log.push_back({{p, y}, {other, y}});
            edges[static_cast<size_t>(e)].a = other;
            edges[static_cast<size_t>(e)].b = y;
        }

        // The pending label must be inclusion-maximal among all separators;
        // if some label properly contains it (which the constructive
        // argument rules out), restart from a maximal superset.
        stamp_set(S);
        int violator = -1;
        for (size_t i = 0; i < distinct.size() && violator == -1; ++i) {
            if (distinct[i].size() <= S.size()) continue;
            bool contains = true;
            for (int v : S)
                if (!distinct[i].contains(v)) {
                    contains = false;
                    break;
                }
            if (contains) violator = static_cast<int>(i);
        }
        if (violator == -1) {
            res.pending_edge = cur;
            res.leaf_node = explore_root;
            return res;
        }
        if (++res.restarts > static_cast<int>(distinct.size()) + 1)
            throw InternalError("pending_minmax_tree: restart loop failed to terminate");
        // climb to an inclusion-maximal superset
        int top = violator;
        for (bool grew = true; grew;) {
            grew = false;
            for (size_t i = 0; i < distinct.size(); ++i)
                if (distinct[i].size() > distinct[static_cast<size_t>(top)].size() &&
                    distinct[static_cast<size_t>(top)].is_proper_subset_of(distinct[i])) {
                    top = static_cast<int>(i);
                    grew = true;
                    break;
                }
        }
        rebuild_adjacency();
        cur = pick_start_edge(&distinct[static_cast<size_t>(top)]);
        if (cur == -1) throw InternalError("pending_minmax_tree: lost a separator label");
        explore_root = std::min(edges[static_cast<size_t>(cur)].a, edges[static_cast<size_t>(cur)].b);
    }
}

// ---------------------------------------------------------------------------
// Containment-order elimination scheme
// ---------------------------------------------------------------------------

struct ContainmentStep {
    VertexSet clique;     // pending clique C (original vertex ids)
    VertexSet separator;  // its min-max label S
    VertexSet pruned;     // C - S
};

struct ContainmentScheme {
    VertexOrdering order;
    std::vector<ContainmentStep> steps;
};

// Repeatedly builds a pending min-max tree, prunes the pending clique
// minus its separator, and recurses on the remaining graph; the separator
// used at each step is inclusion-maximal among the minimal separators of
// the residual graph at that point.
inline ContainmentScheme containment_elimination_scheme(const Graph& g) {
    require_connected(g, "containment_elimination_scheme");
    ContainmentScheme out;
    Graph cur = g;
    std::vector<int> original(static_cast<size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) original[static_cast<size_t>(i)] = i;

    while (cur.vertex_count() > 0) {
        PendingTreeResult r = pending_minmax_tree(cur);
        auto to_original = [&](const VertexSet& s) {
            std::vector<int> ids;
            ids.reserve(static_cast<size_t>(s.size()));
            for (int v : s) ids.push_back(original[static_cast<size_t>(v)]);
            return VertexSet(ids);
        };
        if (r.no_separators()) {
            VertexSet rest = to_original(r.tree.nodes.empty() ? VertexSet{} : r.tree.nodes[0]);
            for (int v : rest) out.order.push_back(v);
            out.steps.push_back({rest, {}, rest});
            break;
        }
        const LabeledEdge& pe = r.tree.edges[static_cast<size_t>(*r.pending_edge)];
        const VertexSet& clique = r.tree.nodes[static_cast<size_t>(r.leaf_node)];
        const VertexSet& sep = pe.label;
        // The used separator must be inclusion-maximal among the residual
        // graph's minimal separators (= the distinct labels of its tree).
        for (const auto& e : r.tree.edges)
            if (sep.is_proper_subset_of(e.label))
                throw InternalError("containment scheme: pruning separator is not inclusion-maximal");

        VertexSet pruned = clique.minus(sep);
        if (pruned.empty()) throw InternalError("containment scheme: empty pruning step");
        out.steps.push_back({to_original(clique), to_original(sep), to_original(pruned)});
        for (int v : to_original(pruned)) out.order.push_back(v);

        std::vector<int> keep;
        for (int v = 0; v < cur.vertex_count(); ++v)
            if (!pruned.contains(v)) keep.push_back(v);
        InducedSubgraph sub = induced_subgraph(cur, VertexSet::from_sorted(keep));
        std::vector<int> next_original(sub.original_id.size());
        for (size_t i = 0; i < sub.original_id.size(); ++i)
            next_original[i] = original[static_cast<size_t>(sub.original_id[i])];
        cur = std::move(sub.graph);
        original = std::move(next_original);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Min-max simplicial vertices
// ---------------------------------------------------------------------------

// Vertices v for which some maximal clique tree has a leaf clique C
// pending on a min-max separator S with v in C - S. A clique C can be
// such a leaf iff some other maximal clique contains its boundary
// bd(C) = C intersect (union of the other cliques); the pending label of
// a leaf is always exactly bd(C).
inline VertexSet minmax_simplicial_vertices(const Graph& g) {
    require_connected(g, "minmax_simplicial_vertices");
    std::vector<VertexSet> cliques = maximal_cliques(g);
    int k = static_cast<int>(cliques.size());
    if (k <= 1) {
        std::vector<int> all(static_cast<size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<size_t>(v)] = v;
        return VertexSet::from_sorted(std::move(all));
    }
    SeparatorPoset poset = separator_poset(g);
    std::vector<int> clique_count(static_cast<size_t>(g.vertex_count()), 0);
    for (const auto& c : cliques)
        for (int v : c) ++clique_count[static_cast<size_t>(v)];

    std::vector<int> out;
    for (int i = 0; i < k; ++i) {
        std::vector<int> bd_ids;
        for (int v : cliques[static_cast<size_t>(i)])
            if (clique_count[static_cast<size_t>(v)] >= 2) bd_ids.push_back(v);
        VertexSet bd = VertexSet::from_sorted(std::move(bd_ids));
        bool leafable = false;
        for (int j = 0; j < k && !leafable; ++j)
            if (j != i && bd.is_subset_of(cliques[static_cast<size_t>(j)])) leafable = true;
        if (!leafable) continue;
        int at = poset.find(bd);
        if (at == -1)
            throw InternalError("minmax_simplicial_vertices: leaf boundary is not a separator label");
        if (!poset.is_min_max[static_cast<size_t>(at)]) continue;
        for (int v : cliques[static_cast<size_t>(i)])
            if (!bd.contains(v)) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return VertexSet::from_sorted(std::move(out));
}

// ---------------------------------------------------------------------------
// Counterexample search
// ---------------------------------------------------------------------------

enum class CounterexampleKind { NoMinmaxTerminal, NoMinminPending };

struct TerminalRow {
    int start;
    int lexbfs_terminal;
    int mcs_terminal;
};

struct Counterexample {
    Graph graph;
    CounterexampleKind kind;
    // no-minmax-terminal evidence
    VertexSet minmax_simplicial;
    std::vector<TerminalRow> terminals;
    // no-minmin-pending evidence
    std::vector<VertexSet> cliques;
    std::vector<VertexSet> min_min_separators;
    std::vector<VertexSet> pending_labels_of_leafable_cliques;
};

// For every start vertex, neither LexBFS nor MCS (with the deterministic
// smallest-id tie-break) may terminate on a min-max simplicial vertex.
inline bool no_minmax_terminal_instance(const Graph& g, VertexSet* mms_out,
                                        std::vector<TerminalRow>* rows_out) {
    VertexSet mms = minmax_simplicial_vertices(g);
    if (mms_out) *mms_out = mms;
    bool instance = true;
    std::vector<TerminalRow> rows;
    for (int s = 0; s < g.vertex_count(); ++s) {
        int tl = lexbfs(g, s).back();
        int tm = mcs(g, s).back();
        rows.push_back({s, tl, tm});
        if (mms.contains(tl) || mms.contains(tm)) {
            instance = false;
            if (!rows_out) break;
        }
    }
    if (rows_out) *rows_out = std::move(rows);
    return instance;
}

// No maximal clique tree of g has a pending edge labelled with a min-min
// separator: no maximal clique C with a boundary bd(C) contained in
// another clique (the leaf-ability condition) has an inclusion-minimal
// boundary.
inline bool no_minmin_pending_instance(const Graph& g, Counterexample* evidence) {
    std::vector<VertexSet> cliques = maximal_cliques(g);
    int k = static_cast<int>(cliques.size());
    if (k <= 1) return false;
    SeparatorPoset poset = separator_poset(g);
    std::vector<int> clique_count(static_cast<size_t>(g.vertex_count()), 0);
    for (const auto& c : cliques)
        for (int v : c) ++clique_count[static_cast<size_t>(v)];

    bool instance = true;
    std::vector<VertexSet> pending_labels;
    for (int i = 0; i < k; ++i) {
        std::vector<int> bd_ids;
        for (int v : cliques[static_cast<size_t>(i)])
            if (clique_count[static_cast<size_t>(v)] >= 2) bd_ids.push_back(v);
        VertexSet bd = VertexSet::from_sorted(std::move(bd_ids));
        bool leafable = false;
        for (int j = 0; j < k && !leafable; ++j)
            if (j != i && bd.is_subset_of(cliques[static_cast<size_t>(j)])) leafable = true;
        if (!leafable) continue;
        pending_labels.push_back(bd);
        int at = poset.find(bd);
        if (at == -1)
            throw InternalError("no_minmin_pending_instance: leaf boundary is not a separator label");
        if (poset.is_min_min[static_cast<size_t>(at)]) instance = false;
    }
    if (evidence) {
        evidence->cliques = std::move(cliques);
        for (size_t i = 0; i < poset.separators.size(); ++i)
            if (poset.is_min_min[i]) evidence->min_min_separators.push_back(poset.separators[i]);
        evidence->pending_labels_of_leafable_cliques = std::move(pending_labels);
    }
    return instance;
}

struct SearchOptions {
    int workers = 0;  // 0: hardware concurrency
};

// Runs the chosen counterexample predicate over a stream of graphs.
// `next` is any callable yielding std::optional<Graph>; it is drained
// under a lock, so plain enumerator lambdas work. Graphs that are not
// connected, not chordal, or have fewer than two maximal cliques are
// skipped. Results are deterministic for a fixed stream regardless of
// worker count: they are reported in stream order.
template <typename Source>
std::vector<Counterexample> search_counterexamples(CounterexampleKind kind, Source&& next,
                                                   const SearchOptions& opt = {}) {
    std::mutex in_mutex, out_mutex;
    long index = 0;
    std::vector<std::pair<long, Counterexample>> found;

    auto worker = [&]() {
        for (;;) {
            std::optional<Graph> g;
            long my_index;
            {
                std::lock_guard<std::mutex> lock(in_mutex);
                g = next();
                my_index = index++;
            }
            if (!g) return;
            if (!is_connected(*g)) continue;
            try {
                Counterexample ce;
                ce.kind = kind;
                bool hit = false;
                if (kind == CounterexampleKind::NoMinmaxTerminal) {
                    if (maximal_cliques(*g).size() < 2) continue;
                    hit = no_minmax_terminal_instance(*g, &ce.minmax_simplicial, &ce.terminals);
                } else {
                    hit = no_minmin_pending_instance(*g, &ce);
                }
                if (hit) {
                    ce.graph = *g;
                    std::lock_guard<std::mutex> lock(out_mutex);
                    found.emplace_back(my_index, std::move(ce));
                }
            } catch (const NotChordalError&) {
                continue;
            }
        }
    };

    int workers = opt.workers > 0 ? opt.workers
                                  : std::max(1u, std::thread::hardware_concurrency());
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::sort(found.begin(), found.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Counterexample> out;
    out.reserve(found.size());
    for (auto& [i, ce] : found) out.push_back(std::move(ce));
    return out;
}

// DOT rendering of a pending-tree result with the pending edge highlighted.
inline void write_dot(const PendingTreeResult& r, const Graph& g, std::ostream& out) {
    write_dot(r.tree, g, out, r.pending_edge.value_or(-1));
}

}  // namespace chordal
