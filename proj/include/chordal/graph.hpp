#pragma once

// Core graph representation for the chordal-graph toolkit: a simple,
// loopless, undirected graph over dense vertex ids 0..n-1 with sorted
// adjacency vectors. Graphs are immutable after construction, so every
// algorithm in this library is a pure function and safe to run
// concurrently on shared inputs.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chordal {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input; `line` is 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error("parse error at line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// An operation was called outside its contract (disconnected input,
// non-permutation ordering, vertex out of range, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Raised by operations that require a chordal input; carries the hole
// (chordless cycle, length >= 4) that witnesses non-chordality.
class NotChordalError : public Error {
public:
    explicit NotChordalError(std::vector<int> hole)
        : Error("graph is not chordal (hole of length " + std::to_string(hole.size()) + ")"),
          hole_(std::move(hole)) {}
    const std::vector<int>& hole() const { return hole_; }

private:
    std::vector<int> hole_;
};

// An enumeration request exceeded its documented budget.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(what) {}
};

// A proven internal invariant failed; always a bug, never user error.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

// A set of vertex ids kept sorted and duplicate-free. Used for cliques,
// separators and certificates; the sorted representation makes subset and
// intersection tests linear and gives a canonical form usable as map key.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> vertices) : v_(std::move(vertices)) { normalize(); }
    VertexSet(std::initializer_list<int> vertices) : v_(vertices) { normalize(); }

    static VertexSet singleton(int v) { return VertexSet(std::vector<int>{v}); }

    bool empty() const { return v_.empty(); }
    int size() const { return static_cast<int>(v_.size()); }
    const std::vector<int>& values() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }
    int operator[](int i) const { return v_[static_cast<size_t>(i)]; }

    bool contains(int v) const { return std::binary_search(v_.begin(), v_.end(), v); }

    bool is_subset_of(const VertexSet& other) const {
        return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
    }

    bool is_proper_subset_of(const VertexSet& other) const {
        return size() < other.size() && is_subset_of(other);
    }

    VertexSet intersect(const VertexSet& other) const {
        std::vector<int> out;
        std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                              std::back_inserter(out));
        return VertexSet::from_sorted(std::move(out));
    }

    VertexSet unite(const VertexSet& other) const {
        std::vector<int> out;
        std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                       std::back_inserter(out));
        return VertexSet::from_sorted(std::move(out));
    }

    VertexSet minus(const VertexSet& other) const {
        std::vector<int> out;
        std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                            std::back_inserter(out));
        return VertexSet::from_sorted(std::move(out));
    }

    VertexSet with(int v) const {
        VertexSet s = *this;
        auto it = std::lower_bound(s.v_.begin(), s.v_.end(), v);
        if (it == s.v_.end() || *it != v) s.v_.insert(it, v);
        return s;
    }

    VertexSet without(int v) const {
        VertexSet s = *this;
        auto it = std::lower_bound(s.v_.begin(), s.v_.end(), v);
        if (it != s.v_.end() && *it == v) s.v_.erase(it);
        return s;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
        return a.v_ <=> b.v_;
    }

    std::string to_string() const {
        std::string s = "{";
        for (size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v_[i]);
        }
        return s + "}";
    }

    // Trusts the caller: input must already be sorted and unique.
    static VertexSet from_sorted(std::vector<int> v) {
        VertexSet s;
        s.v_ = std::move(v);
        return s;
    }

private:
    void normalize() {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    }

    std::vector<int> v_;
};

// A permutation of the vertices of some graph. Interpreted as an
// elimination scheme: ord[0] is eliminated first.
using VertexOrdering = std::vector<int>;

class Graph {
public:
    Graph() = default;

    // Builds and validates: ids in range, no self-loops; duplicate edges
    // collapse. Symmetry holds by construction.
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
          std::vector<std::string> labels = {})
        : adj_(static_cast<size_t>(vertex_count)), labels_(std::move(labels)) {
        if (vertex_count < 0) throw PreconditionError("negative vertex count");
        if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count)
            throw PreconditionError("label table size does not match vertex count");
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
                throw PreconditionError("edge endpoint out of range");
            if (u == v) throw PreconditionError("self-loop rejected");
            adj_[static_cast<size_t>(u)].push_back(v);
            adj_[static_cast<size_t>(v)].push_back(u);
        }
        size_t m2 = 0;
        for (auto& nb : adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            m2 += nb.size();
        }
        edge_count_ = m2 / 2;
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    size_t edge_count() const { return edge_count_; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    bool has_edge(int u, int v) const {
        const auto& nb = adj_[static_cast<size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count_);
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool has_labels() const { return !labels_.empty(); }

    // Display name of a vertex; falls back to the numeric id.
    std::string label(int v) const {
        if (has_labels()) return labels_[static_cast<size_t>(v)];
        return std::to_string(v);
    }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
    size_t edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// Parsing and serialization
// ---------------------------------------------------------------------------

// Edge-list text: one edge per line as two whitespace-separated tokens.
// Tokens are arbitrary labels mapped to ids in first-appearance order.
// Lines that are empty or start with '#' are skipped. Duplicate edges are
// idempotent; a line with both tokens equal is a self-loop and rejected.
inline Graph parse_edge_list(std::istream& in) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<std::string, int>> table;  // sorted label -> id

    auto intern = [&](const std::string& tok) {
        auto it = std::lower_bound(table.begin(), table.end(), tok,
                                   [](const auto& p, const std::string& t) { return p.first < t; });
        if (it != table.end() && it->first == tok) return it->second;
        int id = static_cast<int>(labels.size());
        labels.push_back(tok);
        table.insert(it, {tok, id});
        return id;
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;           // blank line
        if (a[0] == '#') continue;          // comment
        if (!(ls >> b)) throw ParseError("expected two tokens, got one", lineno);
        if (ls >> extra) throw ParseError("expected two tokens, got more", lineno);
        if (a == b) throw ParseError("self-loop '" + a + " " + b + "'", lineno);
        int ia = intern(a);
        int ib = intern(b);
        edges.emplace_back(ia, ib);
    }
    int n = static_cast<int>(labels.size());
    return Graph(n, edges, std::move(labels));
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

// DIMACS-like reader: 'c' comment lines, one 'p edge <n> <m>' header,
// then 'e <u> <v>' lines with 1-based endpoints.
inline Graph read_dimacs(std::istream& in) {
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "c") continue;
        if (kind == "p") {
            std::string format;
            long m = 0;
            if (!(ls >> format >> n >> m) || format != "edge" || n < 0)
                throw ParseError("malformed problem line", lineno);
            edges.reserve(static_cast<size_t>(m));
        } else if (kind == "e") {
            int u, v;
            if (n < 0) throw ParseError("edge before problem line", lineno);
            if (!(ls >> u >> v)) throw ParseError("malformed edge line", lineno);
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError("edge endpoint out of range", lineno);
            if (u == v) throw ParseError("self-loop", lineno);
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError("unknown line type '" + kind + "'", lineno);
        }
    }
    if (n < 0) throw ParseError("missing problem line", lineno ? lineno : 1);
    return Graph(n, edges);
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
    for (auto [u, v] : g.edges()) out << g.label(u) << " " << g.label(v) << "\n";
}

inline void write_dot(const Graph& g, std::ostream& out) {
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

// ---------------------------------------------------------------------------
// Basic predicates
// ---------------------------------------------------------------------------

inline void require_vertex(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.vertex_count())
        throw PreconditionError(std::string(what) + ": vertex out of range");
}

// True iff every pair of vertices in `s` is adjacent. Empty sets and
// singletons are vacuously cliques.
inline bool is_clique(const Graph& g, const VertexSet& s) {
    for (int v : s) require_vertex(g, v, "is_clique");
    const auto& vs = s.values();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[static_cast<size_t>(s)] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[static_cast<size_t>(id)].push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

inline void require_connected(const Graph& g, const char* what) {
    if (!is_connected(g)) throw PreconditionError(std::string(what) + ": graph must be connected");
}

// True iff a and b lie in different components of G - s. Requires a,b
// outside s and distinct.
inline bool separates(const Graph& g, const VertexSet& s, int a, int b) {
    require_vertex(g, a, "separates");
    require_vertex(g, b, "separates");
    if (a == b) throw PreconditionError("separates: endpoints must differ");
    if (s.contains(a) || s.contains(b))
        throw PreconditionError("separates: endpoint inside separator");
    std::vector<char> blocked(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : s) {
        require_vertex(g, v, "separates");
        blocked[static_cast<size_t>(v)] = 1;
    }
    std::vector<int> stack{a};
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    seen[static_cast<size_t>(a)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == b) return false;
        for (int w : g.neighbors(v)) {
            if (!seen[static_cast<size_t>(w)] && !blocked[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return true;
}

// Minimal-separator test via the full-component characterization: s is a
// minimal separator iff G - s has at least two components whose
// neighborhood is all of s. (Such components contain the pair the
// separator is inclusion-minimal for.)
inline bool is_minimal_separator(const Graph& g, const VertexSet& s) {
    require_connected(g, "is_minimal_separator");
    for (int v : s) require_vertex(g, v, "is_minimal_separator");
    int n = g.vertex_count();
    std::vector<char> in_s(static_cast<size_t>(n), 0);
    for (int v : s) in_s[static_cast<size_t>(v)] = 1;
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int full = 0;
    int comps = 0;
    std::vector<int> stack;
    std::vector<char> sees(static_cast<size_t>(n), 0);
    for (int start = 0; start < n; ++start) {
        if (in_s[static_cast<size_t>(start)] || comp[static_cast<size_t>(start)] != -1) continue;
        int id = comps++;
        comp[static_cast<size_t>(start)] = id;
        stack.push_back(start);
        int seen_of_s = 0;
        std::vector<int> touched;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (in_s[static_cast<size_t>(w)]) {
                    if (!sees[static_cast<size_t>(w)]) {
                        sees[static_cast<size_t>(w)] = 1;
                        touched.push_back(w);
                        ++seen_of_s;
                    }
                } else if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        for (int w : touched) sees[static_cast<size_t>(w)] = 0;
        if (seen_of_s == s.size()) ++full;
    }
    return full >= 2;
}

// Induced subgraph on `keep` (original ids preserved through the returned
// map: result ids are positions in `keep`).
struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_id;  // new id -> old id
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<int> old_of = keep.values();
    std::vector<int> new_of(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < old_of.size(); ++i) new_of[static_cast<size_t>(old_of[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : old_of)
        for (int v : g.neighbors(u))
            if (u < v && new_of[static_cast<size_t>(v)] != -1)
                edges.emplace_back(new_of[static_cast<size_t>(u)], new_of[static_cast<size_t>(v)]);
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(old_of.size());
        for (int u : old_of) labels.push_back(g.label(u));
    }
    return {Graph(static_cast<int>(old_of.size()), edges, std::move(labels)), std::move(old_of)};
}

// ---------------------------------------------------------------------------
// Random chordal generation
// ---------------------------------------------------------------------------

namespace detail {

// Deterministic cross-platform uniform integer in [0, bound); avoids
// std::uniform_int_distribution whose output is implementation-defined.
inline uint64_t rng_below(std::mt19937_64& rng, uint64_t bound) {
    // Lemire rejection; bound is tiny compared to 2^64 so one round suffices
    // almost surely.
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        uint64_t r = rng();
        __uint128_t m = static_cast<__uint128_t>(r) * bound;
        if (static_cast<uint64_t>(m) >= threshold) return static_cast<uint64_t>(m >> 64);
    }
}

}  // namespace detail

// Connected chordal graph on n vertices, deterministic for a fixed seed.
// Construction: vertices are added one at a time, each attached to a
// nonempty random subset of a previously formed clique, so the reverse
// insertion order is a simplicial elimination scheme by construction.
// `density` in (0,1] scales the base clique size k ~ density*(n-1);
// expected edge count is about n*(k+1)/2.
inline Graph generate_random_chordal(int n, double density, uint64_t seed) {
    if (n < 1) throw PreconditionError("generate_random_chordal: n must be >= 1");
    if (!(density > 0.0) || density > 1.0)
        throw PreconditionError("generate_random_chordal: density must be in (0,1]");
    std::mt19937_64 rng(seed);
    int k = std::clamp(static_cast<int>(density * (n - 1) + 0.5), 1, std::max(1, n - 1));

    std::vector<std::pair<int, int>> edges;
    // Pool of cliques a new vertex may attach to; each entry is a clique.
    std::vector<std::vector<int>> pool;
    int base = std::min(k + 1, n);
    std::vector<int> first(static_cast<size_t>(base));
    for (int i = 0; i < base; ++i) {
        first[static_cast<size_t>(i)] = i;
        for (int j = 0; j < i; ++j) edges.emplace_back(j, i);
    }
    pool.push_back(first);

    for (int v = base; v < n; ++v) {
        const auto& slot = pool[detail::rng_below(rng, pool.size())];
        int t = 1 + static_cast<int>(detail::rng_below(rng, slot.size()));
        std::vector<int> attach = slot;
        // Partial Fisher-Yates: the first t entries become the attachment set.
        for (int i = 0; i < t; ++i) {
            size_t j = static_cast<size_t>(i) +
                       detail::rng_below(rng, attach.size() - static_cast<size_t>(i));
            std::swap(attach[static_cast<size_t>(i)], attach[j]);
        }
        attach.resize(static_cast<size_t>(t));
        for (int u : attach) edges.emplace_back(u, v);
        attach.push_back(v);
        pool.push_back(std::move(attach));
    }
    return Graph(n, edges);
}

}  // namespace chordal
