#pragma once

// Brute-force ground truth for property tests: exhaustive small-graph
// enumeration, all maximum-weight clique trees by spanning-tree listing,
// minimal separators by subset search and by neighborhood expansion, and
// reversible orderings by (pruned) permutation search.
//
// Repository rule: this header shares only the plain data types with the
// primary algorithms. Every check below (connectivity, chordality,
// cliques, reachability) is implemented independently so oracle
// agreements are meaningful evidence.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "chordal/graph.hpp"
#include "chordal/tree_types.hpp"

namespace chordal::oracle {

constexpr int kMaxExhaustiveGraphVertices = 8;   // 2^C(n,2) edge subsets
constexpr int kMaxSubsetSeparatorVertices = 12;  // 2^n candidate subsets
constexpr int kMaxOrderingVertices = 9;          // n! permutations
constexpr int kMaxCliqueTreeCliques = 9;
constexpr long kDefaultTreeBudget = 100000;

// ---------------------------------------------------------------------------
// Bitmask helpers (n <= 31 throughout this module)
// ---------------------------------------------------------------------------

namespace bits {

inline std::vector<uint32_t> adjacency_masks(const Graph& g) {
    std::vector<uint32_t> adj(static_cast<size_t>(g.vertex_count()), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<size_t>(u)] |= 1u << v;
        adj[static_cast<size_t>(v)] |= 1u << u;
    }
    return adj;
}

inline bool mask_connected(const std::vector<uint32_t>& adj, uint32_t verts) {
    if (verts == 0) return true;
    uint32_t seen = verts & (~verts + 1);  // lowest set bit
    for (;;) {
        uint32_t grow = seen;
        uint32_t frontier = seen;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            grow |= adj[static_cast<size_t>(v)] & verts;
        }
        if (grow == seen) break;
        seen = grow;
    }
    return seen == verts;
}

inline bool mask_is_clique(const std::vector<uint32_t>& adj, uint32_t verts) {
    uint32_t rest = verts;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if ((adj[static_cast<size_t>(v)] & verts) != (verts & ~(1u << v))) return false;
    }
    return true;
}

// Greedy simplicial elimination over the masked subgraph; by Dirac's
// theorem this succeeds exactly on chordal graphs.
inline bool mask_chordal(const std::vector<uint32_t>& adj, uint32_t verts) {
    uint32_t live = verts;
    while (live) {
        uint32_t rest = live;
        bool found = false;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            uint32_t nb = adj[static_cast<size_t>(v)] & live;
            if (mask_is_clique(adj, nb)) {
                live &= ~(1u << v);
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace bits

// ---------------------------------------------------------------------------
// Independent basic checks
// ---------------------------------------------------------------------------

inline bool connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.vertex_count();
}

inline bool reachable_avoiding(const Graph& g, int a, int b, const VertexSet& blocked) {
    if (blocked.contains(a) || blocked.contains(b)) return false;
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> stack{a};
    seen[static_cast<size_t>(a)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == b) return true;
        for (int w : g.neighbors(v))
            if (!seen[static_cast<size_t>(w)] && !blocked.contains(w)) {
                seen[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
    }
    return false;
}

inline bool clique_in(const Graph& g, const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

inline bool chordal(const Graph& g) {
    if (g.vertex_count() > 31) throw BudgetError("oracle::chordal: graph too large");
    auto adj = bits::adjacency_masks(g);
    uint32_t all = g.vertex_count() == 31 ? 0x7fffffffu
                                          : ((1u << g.vertex_count()) - 1u);
    return bits::mask_chordal(adj, all);
}

// ---------------------------------------------------------------------------
// Corpus enumeration
// ---------------------------------------------------------------------------

struct CorpusFilters {
    bool connected = true;
    bool chordal = false;
};

struct CorpusSpec {
    enum class Mode { Exhaustive, Random };
    Mode mode = Mode::Exhaustive;
    // exhaustive: every labeled graph with n_min..n_max vertices
    int n_min = 1;
    int n_max = 0;
    // random: `count` draws from the chordal generator
    int count = 0;
    int n = 0;
    double density = 0.5;
    uint64_t seed = 0;
    CorpusFilters filters;

    // Every labeled graph on exactly n vertices.
    static CorpusSpec exhaustive(int n, CorpusFilters f = {}) {
        CorpusSpec s;
        s.mode = Mode::Exhaustive;
        s.n_min = s.n_max = n;
        s.filters = f;
        if (n < 1 || n > 9)
            throw PreconditionError("CorpusSpec: exhaustive mode requires 1 <= n <= 9");
        return s;
    }
    // Every labeled graph with at most n_max vertices.
    static CorpusSpec exhaustive_up_to(int n_max, CorpusFilters f = {}) {
        CorpusSpec s = exhaustive(n_max, f);
        s.n_min = 1;
        return s;
    }
    static CorpusSpec random(int count, int n, double density, uint64_t seed,
                             CorpusFilters f = {}) {
        CorpusSpec s;
        s.mode = Mode::Random;
        s.count = count;
        s.n = n;
        s.density = density;
        s.seed = seed;
        s.filters = f;
        return s;
    }
};

// Streams every graph matching `spec` into `fn`; returning false from the
// callback stops the stream early.
inline void enumerate_graphs(const CorpusSpec& spec, const std::function<bool(const Graph&)>& fn) {
    if (spec.mode == CorpusSpec::Mode::Exhaustive) {
        if (spec.n_max > kMaxExhaustiveGraphVertices)
            throw BudgetError("enumerate_graphs: exhaustive graph corpus is budgeted to n <= " +
                              std::to_string(kMaxExhaustiveGraphVertices));
        for (int n = spec.n_min; n <= spec.n_max; ++n) {
            int pairs = n * (n - 1) / 2;
            std::vector<std::pair<int, int>> pair_of(static_cast<size_t>(pairs));
            {
                int idx = 0;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v) pair_of[static_cast<size_t>(idx++)] = {u, v};
            }
            std::vector<uint32_t> adj(static_cast<size_t>(n));
            uint32_t all = (1u << n) - 1u;
            for (uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
                std::fill(adj.begin(), adj.end(), 0u);
                uint64_t m = mask;
                while (m) {
                    int e = std::countr_zero(m);
                    m &= m - 1;
                    auto [u, v] = pair_of[static_cast<size_t>(e)];
                    adj[static_cast<size_t>(u)] |= 1u << v;
                    adj[static_cast<size_t>(v)] |= 1u << u;
                }
                if (spec.filters.connected && !bits::mask_connected(adj, all)) continue;
                if (spec.filters.chordal && !bits::mask_chordal(adj, all)) continue;
                std::vector<std::pair<int, int>> edges;
                uint64_t mm = mask;
                while (mm) {
                    int e = std::countr_zero(mm);
                    mm &= mm - 1;
                    edges.push_back(pair_of[static_cast<size_t>(e)]);
                }
                if (!fn(Graph(n, edges))) return;
            }
        }
        return;
    }
    // Random mode: the generator yields connected chordal graphs, so the
    // standard filters hold by construction.
    for (int i = 0; i < spec.count; ++i) {
        Graph g = generate_random_chordal(spec.n, spec.density, spec.seed + static_cast<uint64_t>(i));
        if (!fn(g)) return;
    }
}

// ---------------------------------------------------------------------------
// Maximal cliques (Bron-Kerbosch with pivot), independent of the
// elimination-sweep extraction used by the primary path.
// ---------------------------------------------------------------------------

inline std::vector<VertexSet> maximal_cliques_brute(const Graph& g) {
    std::vector<VertexSet> out;
    int n = g.vertex_count();
    if (n == 0) return out;
    std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> bk =
        [&](std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
            if (p.empty() && x.empty()) {
                out.push_back(VertexSet(r));
                return;
            }
            int pivot = -1;
            size_t best = 0;
            for (int u : p) {
                size_t c = 0;
                for (int w : p)
                    if (g.has_edge(u, w)) ++c;
                if (pivot == -1 || c > best) {
                    pivot = u;
                    best = c;
                }
            }
            for (int u : x) {
                size_t c = 0;
                for (int w : p)
                    if (g.has_edge(u, w)) ++c;
                if (pivot == -1 || c > best) {
                    pivot = u;
                    best = c;
                }
            }
            std::vector<int> cands;
            for (int v : p)
                if (pivot == -1 || !g.has_edge(pivot, v)) cands.push_back(v);
            for (int v : cands) {
                std::vector<int> np, nx;
                for (int w : p)
                    if (g.has_edge(v, w)) np.push_back(w);
                for (int w : x)
                    if (g.has_edge(v, w)) nx.push_back(w);
                r.push_back(v);
                bk(r, std::move(np), std::move(nx));
                r.pop_back();
                p.erase(std::find(p.begin(), p.end(), v));
                x.push_back(v);
            }
        };
    std::vector<int> r, p(static_cast<size_t>(n)), x;
    std::iota(p.begin(), p.end(), 0);
    bk(r, std::move(p), std::move(x));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Clique intersection graph, maximum spanning trees, junction condition
// ---------------------------------------------------------------------------

namespace detail {

struct WeightedEdge {
    int a, b, w;
};

inline std::vector<WeightedEdge> intersection_edges(const std::vector<VertexSet>& cliques) {
    std::vector<WeightedEdge> edges;
    int k = static_cast<int>(cliques.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int w = cliques[static_cast<size_t>(i)].intersect(cliques[static_cast<size_t>(j)]).size();
            if (w > 0) edges.push_back({i, j, w});
        }
    return edges;
}

struct Dsu {
    std::vector<int> parent, size;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)), size(static_cast<size_t>(n), 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) const {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    }
    // Union without path compression so it can be rolled back.
    bool unite(int a, int b, std::vector<int>* log) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[static_cast<size_t>(a)] < size[static_cast<size_t>(b)]) std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;
        size[static_cast<size_t>(a)] += size[static_cast<size_t>(b)];
        if (log) log->push_back(b);
        return true;
    }
    void rollback(int b) {
        int a = parent[static_cast<size_t>(b)];
        size[static_cast<size_t>(a)] -= size[static_cast<size_t>(b)];
        parent[static_cast<size_t>(b)] = b;
    }
};

inline long long max_spanning_tree_weight(int k, std::vector<WeightedEdge> edges) {
    std::sort(edges.begin(), edges.end(),
              [](const WeightedEdge& x, const WeightedEdge& y) { return x.w > y.w; });
    Dsu dsu(k);
    long long w = 0;
    int used = 0;
    for (const auto& e : edges) {
        if (dsu.unite(e.a, e.b, nullptr)) {
            w += e.w;
            if (++used == k - 1) break;
        }
    }
    if (used != k - 1) throw PreconditionError("clique intersection graph is disconnected");
    return w;
}

}  // namespace detail

// Junction-tree condition: a valid maximal clique tree exists iff the
// maximum spanning tree of the clique intersection graph has total weight
// sum(|C_i|) - n. Works on arbitrary connected graphs, which makes it the
// oracle for "G admits a maximal clique tree".
inline bool has_valid_clique_tree(const Graph& g) {
    if (!connected(g)) throw PreconditionError("has_valid_clique_tree: graph must be connected");
    if (g.vertex_count() == 0) return true;
    auto cliques = maximal_cliques_brute(g);
    if (cliques.size() == 1) return true;
    long long want = -static_cast<long long>(g.vertex_count());
    for (const auto& c : cliques) want += c.size();
    try {
        return detail::max_spanning_tree_weight(static_cast<int>(cliques.size()),
                                                detail::intersection_edges(cliques)) == want;
    } catch (const PreconditionError&) {
        return false;  // intersection graph disconnected: no tree at all
    }
}

// Independent validity check of a clique tree against g: nodes are the
// Bron-Kerbosch cliques, edges form a tree, labels are intersections, the
// per-vertex subtree property holds, and the weight is maximum.
inline bool is_valid_clique_tree(const Graph& g, const CliqueTree& t) {
    auto want = maximal_cliques_brute(g);
    auto have = t.nodes;
    std::sort(have.begin(), have.end());
    if (have != want) return false;
    int k = static_cast<int>(t.nodes.size());
    if (static_cast<int>(t.edges.size()) != std::max(0, k - 1)) return false;
    detail::Dsu dsu(k);
    for (const auto& e : t.edges) {
        if (e.a < 0 || e.b < 0 || e.a >= k || e.b >= k) return false;
        if (e.label != t.nodes[static_cast<size_t>(e.a)].intersect(t.nodes[static_cast<size_t>(e.b)]))
            return false;
        if (!dsu.unite(e.a, e.b, nullptr)) return false;
    }
    std::vector<int> cliques_with(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> edges_with(static_cast<size_t>(g.vertex_count()), 0);
    for (const auto& c : t.nodes)
        for (int v : c) ++cliques_with[static_cast<size_t>(v)];
    for (const auto& e : t.edges)
        for (int v : e.label) ++edges_with[static_cast<size_t>(v)];
    for (int v = 0; v < g.vertex_count(); ++v)
        if (cliques_with[static_cast<size_t>(v)] > 0 &&
            edges_with[static_cast<size_t>(v)] != cliques_with[static_cast<size_t>(v)] - 1)
            return false;
    if (k > 1) {
        long long w = total_label_weight(t.edges);
        if (w != detail::max_spanning_tree_weight(k, detail::intersection_edges(t.nodes)))
            return false;
    }
    return true;
}

// Spanning trees of the clique intersection graph, enumerated by
// include/exclude recursion over edges sorted by falling weight. With
// `max_weight_only` an optimistic weight bound prunes everything below
// the maximum. Budgeted: at most `budget` trees are emitted, graphs with
// more than 9 maximal cliques are refused.
inline void enumerate_clique_spanning_trees(const Graph& g,
                                            const std::function<bool(const CliqueTree&)>& fn,
                                            bool max_weight_only,
                                            long budget = kDefaultTreeBudget) {
    if (!connected(g))
        throw PreconditionError("enumerate_clique_spanning_trees: graph must be connected");
    auto cliques = maximal_cliques_brute(g);
    int k = static_cast<int>(cliques.size());
    if (k > kMaxCliqueTreeCliques)
        throw BudgetError("enumerate_clique_spanning_trees: more than " +
                          std::to_string(kMaxCliqueTreeCliques) + " maximal cliques");
    if (k <= 1) {
        CliqueTree t;
        t.nodes = cliques;
        fn(t);
        return;
    }
    auto edges = detail::intersection_edges(cliques);
    std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
        return x.w != y.w ? x.w > y.w : std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    long long best = detail::max_spanning_tree_weight(k, edges);
    std::vector<long long> prefix(edges.size() + 1, 0);
    for (size_t i = 0; i < edges.size(); ++i) prefix[i + 1] = prefix[i] + edges[i].w;

    detail::Dsu dsu(k);
    std::vector<int> chosen;
    long emitted = 0;
    bool stopped = false;

    std::function<void(size_t, long long, int)> rec = [&](size_t idx, long long w, int comps) {
        if (stopped) return;
        if (comps == 1) {
            if (!max_weight_only || w == best) {
                if (++emitted > budget)
                    throw BudgetError("enumerate_clique_spanning_trees: more than " +
                                      std::to_string(budget) + " spanning trees");
                CliqueTree t;
                t.nodes = cliques;
                for (int e : chosen) {
                    const auto& we = edges[static_cast<size_t>(e)];
                    t.edges.push_back({we.a, we.b,
                                       cliques[static_cast<size_t>(we.a)].intersect(
                                           cliques[static_cast<size_t>(we.b)])});
                }
                canonicalize_edges(t.edges);
                if (!fn(t)) stopped = true;
            }
            return;
        }
        if (idx >= edges.size()) return;
        int need = comps - 1;
        if (idx + static_cast<size_t>(need) > edges.size()) return;
        if (max_weight_only &&
            w + (prefix[idx + static_cast<size_t>(need)] - prefix[idx]) < best)
            return;

        const auto& e = edges[idx];
        std::vector<int> log;
        if (dsu.unite(e.a, e.b, &log)) {
            chosen.push_back(static_cast<int>(idx));
            rec(idx + 1, w + e.w, comps - 1);
            chosen.pop_back();
            for (int b : log) dsu.rollback(b);
        }
        rec(idx + 1, w, comps);
    };
    rec(0, 0, k);
}

// Every maximum-weight spanning tree of the clique intersection graph.
inline void enumerate_max_clique_trees(const Graph& g,
                                       const std::function<bool(const CliqueTree&)>& fn,
                                       long budget = kDefaultTreeBudget) {
    enumerate_clique_spanning_trees(g, fn, true, budget);
}

// Validity without the weight condition: nodes are the maximal cliques,
// edges form a tree labelled by intersections, and each vertex's cliques
// induce a subtree.
inline bool is_junction_tree(const Graph& g, const CliqueTree& t) {
    auto want = maximal_cliques_brute(g);
    auto have = t.nodes;
    std::sort(have.begin(), have.end());
    if (have != want) return false;
    int k = static_cast<int>(t.nodes.size());
    if (static_cast<int>(t.edges.size()) != std::max(0, k - 1)) return false;
    detail::Dsu dsu(k);
    for (const auto& e : t.edges) {
        if (e.a < 0 || e.b < 0 || e.a >= k || e.b >= k) return false;
        if (e.label != t.nodes[static_cast<size_t>(e.a)].intersect(t.nodes[static_cast<size_t>(e.b)]))
            return false;
        if (!dsu.unite(e.a, e.b, nullptr)) return false;
    }
    std::vector<int> cliques_with(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> edges_with(static_cast<size_t>(g.vertex_count()), 0);
    for (const auto& c : t.nodes)
        for (int v : c) ++cliques_with[static_cast<size_t>(v)];
    for (const auto& e : t.edges)
        for (int v : e.label) ++edges_with[static_cast<size_t>(v)];
    for (int v = 0; v < g.vertex_count(); ++v)
        if (cliques_with[static_cast<size_t>(v)] > 0 &&
            edges_with[static_cast<size_t>(v)] != cliques_with[static_cast<size_t>(v)] - 1)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Minimal separators
// ---------------------------------------------------------------------------

// Subset mode: definitional check over all 2^n vertex subsets. A subset is
// a minimal separator iff some pair is separated by it but by none of its
// one-element-removed subsets (separation is monotone, so single removals
// suffice).
inline std::set<VertexSet> brute_minimal_separators_subsets(const Graph& g) {
    if (!connected(g))
        throw PreconditionError("brute_minimal_separators_subsets: graph must be connected");
    int n = g.vertex_count();
    if (n > kMaxSubsetSeparatorVertices)
        throw BudgetError("brute_minimal_separators_subsets: budgeted to n <= " +
                          std::to_string(kMaxSubsetSeparatorVertices));
    std::set<VertexSet> out;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> sv;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) sv.push_back(v);
        if (static_cast<int>(sv.size()) >= n - 1) continue;  // cannot separate a pair
        VertexSet s = VertexSet::from_sorted(sv);
        bool minimal = false;
        for (int a = 0; a < n && !minimal; ++a) {
            if (s.contains(a)) continue;
            for (int b = a + 1; b < n && !minimal; ++b) {
                if (s.contains(b)) continue;
                if (reachable_avoiding(g, a, b, s)) continue;
                bool needed_all = true;
                for (int x : s)
                    if (!reachable_avoiding(g, a, b, s.without(x))) {
                        needed_all = false;
                        break;
                    }
                if (needed_all) minimal = true;
            }
        }
        if (minimal) out.insert(std::move(s));
    }
    return out;
}

namespace detail {

// Full-component test: S is a minimal separator iff G-S has at least two
// components adjacent to every vertex of S.
inline bool minimal_separator_by_components(const Graph& g, const VertexSet& s) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int full = 0;
    for (int start = 0; start < n; ++start) {
        if (s.contains(start) || comp[static_cast<size_t>(start)] != -1) continue;
        std::vector<int> members;
        std::vector<int> stack{start};
        comp[static_cast<size_t>(start)] = start;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.neighbors(v))
                if (!s.contains(w) && comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = start;
                    stack.push_back(w);
                }
        }
        bool is_full = true;
        for (int x : s) {
            bool sees = false;
            for (int w : g.neighbors(x))
                if (comp[static_cast<size_t>(w)] == start) {
                    sees = true;
                    break;
                }
            if (!sees) {
                is_full = false;
                break;
            }
        }
        if (is_full && ++full >= 2) return true;
    }
    return false;
}

}  // namespace detail

// Expansion mode (any n): Berry-Bordat-Cogis style closure. Seeds are the
// component neighborhoods N(C) for components C of G - N[v]; each
// separator S expands through N(C) for components C of G - (S + N[x]),
// x in S. Every candidate is verified by the full-component test before
// being kept.
inline std::set<VertexSet> brute_minimal_separators(const Graph& g) {
    if (!connected(g)) throw PreconditionError("brute_minimal_separators: graph must be connected");
    int n = g.vertex_count();
    std::set<VertexSet> out;
    std::vector<VertexSet> queue;

    auto offer = [&](const VertexSet& cand) {
        if (cand.empty()) return;
        if (out.count(cand)) return;
        if (detail::minimal_separator_by_components(g, cand)) {
            out.insert(cand);
            queue.push_back(cand);
        }
    };

    auto component_neighborhoods = [&](const VertexSet& removed) {
        std::vector<VertexSet> result;
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (int start = 0; start < n; ++start) {
            if (removed.contains(start) || seen[static_cast<size_t>(start)]) continue;
            std::vector<int> stack{start};
            seen[static_cast<size_t>(start)] = 1;
            std::vector<int> nbhd;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : g.neighbors(v)) {
                    if (removed.contains(w)) {
                        nbhd.push_back(w);
                    } else if (!seen[static_cast<size_t>(w)]) {
                        seen[static_cast<size_t>(w)] = 1;
                        stack.push_back(w);
                    }
                }
            }
            result.push_back(VertexSet(nbhd));
        }
        return result;
    };

    for (int v = 0; v < n; ++v) {
        VertexSet closed = VertexSet(std::vector<int>(g.neighbors(v).begin(), g.neighbors(v).end())).with(v);
        for (auto& cand : component_neighborhoods(closed)) offer(cand);
    }
    for (size_t at = 0; at < queue.size(); ++at) {
        VertexSet s = queue[at];  // copy: queue grows
        for (int x : s) {
            VertexSet removed = s;
            removed = removed.with(x);
            for (int w : g.neighbors(x)) removed = removed.with(w);
            for (auto& cand : component_neighborhoods(removed)) offer(cand);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reversible orderings by pruned permutation search
// ---------------------------------------------------------------------------

namespace detail {

// Prefix-sound conditions: placing v at the next position requires v
// simplicial in the not-yet-placed subgraph (forward direction) and
// N(v) within the placed prefix to be a clique (reverse direction).
// Violations persist under extension, so pruning is exact.
template <typename Emit>
inline void reversible_search(const Graph& g, Emit&& emit, bool all) {
    int n = g.vertex_count();
    auto adj = bits::adjacency_masks(g);
    uint32_t full = (1u << n) - 1u;  // n <= 31 enforced by callers
    std::vector<int> prefix;
    prefix.reserve(static_cast<size_t>(n));
    bool stop = false;

    std::function<void(uint32_t)> rec = [&](uint32_t remaining) {
        if (stop) return;
        if (remaining == 0) {
            if (!emit(prefix)) stop = true;
            return;
        }
        uint32_t placed = full & ~remaining;
        uint32_t cand = remaining;
        while (cand && !stop) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            uint32_t later = adj[static_cast<size_t>(v)] & remaining & ~(1u << v);
            uint32_t before = adj[static_cast<size_t>(v)] & placed;
            if (!bits::mask_is_clique(adj, later)) continue;
            if (!bits::mask_is_clique(adj, before)) continue;
            prefix.push_back(v);
            rec(remaining & ~(1u << v));
            prefix.pop_back();
            if (!all && stop) return;
        }
    };
    rec(full);
}

}  // namespace detail

// All orderings that are simplicial elimination schemes in both
// directions, in lexicographic order.
inline std::vector<VertexOrdering> brute_reversible_orderings(const Graph& g) {
    if (g.vertex_count() > kMaxOrderingVertices)
        throw BudgetError("brute_reversible_orderings: budgeted to n <= " +
                          std::to_string(kMaxOrderingVertices));
    std::vector<VertexOrdering> out;
    detail::reversible_search(
        g,
        [&](const std::vector<int>& ord) {
            out.push_back(ord);
            return true;
        },
        true);
    return out;
}

// Existence-only variant (no vertex budget needed beyond the bitmask
// width; pruning exits quickly on negatives).
inline bool has_reversible_ordering(const Graph& g) {
    if (g.vertex_count() > 31) throw BudgetError("has_reversible_ordering: n <= 31");
    bool found = false;
    detail::reversible_search(
        g,
        [&](const std::vector<int>&) {
            found = true;
            return false;
        },
        false);
    return found;
}

}  // namespace chordal::oracle
