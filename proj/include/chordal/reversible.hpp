#pragma once

// Reversible elimination schemes and proper interval recognition.
// An ordering is reversible when it is a simplicial elimination scheme in
// both directions; a connected graph admits one exactly when it is a
// proper interval graph, and the negative witnesses are the forbidden
// structures: hole, claw, net, 3-sun.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "chordal/graph.hpp"
#include "chordal/search.hpp"

namespace chordal {

struct ReversibleOrderingCheck {
    bool ok = false;
    // When !ok: the direction that failed and its first violation. The
    // violation positions refer to the failing direction's ordering.
    bool failed_reversed = false;
    SchemeCheck violation;
};

// True iff both `ord` and its reverse are simplicial elimination schemes.
inline ReversibleOrderingCheck is_reversible_ordering(const Graph& g, const VertexOrdering& ord) {
    SchemeCheck fwd = is_simplicial_elimination_scheme(g, ord);
    if (!fwd.ok) return {false, false, fwd};
    VertexOrdering rev(ord.rbegin(), ord.rend());
    SchemeCheck bwd = is_simplicial_elimination_scheme(g, rev);
    if (!bwd.ok) return {false, true, bwd};
    return {true, false, {}};
}

// True iff N(v) can be partitioned into at most two cliques, decided by
// 2-coloring the complement of the graph induced on N(v).
inline bool is_bisimplicial(const Graph& g, int v) {
    require_vertex(g, v, "is_bisimplicial");
    const auto& nb = g.neighbors(v);
    int d = static_cast<int>(nb.size());
    std::vector<int> color(static_cast<size_t>(d), -1);
    for (int s = 0; s < d; ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < d; ++j) {
                if (j == i || g.has_edge(nb[static_cast<size_t>(i)], nb[static_cast<size_t>(j)]))
                    continue;  // complement edge iff non-adjacent
                if (color[static_cast<size_t>(j)] == -1) {
                    color[static_cast<size_t>(j)] = 1 - color[static_cast<size_t>(i)];
                    stack.push_back(j);
                } else if (color[static_cast<size_t>(j)] == color[static_cast<size_t>(i)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

enum class WitnessKind { Ordering, Claw, Net, Sun3, Hole };

inline const char* witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::Ordering: return "ordering";
        case WitnessKind::Claw: return "claw";
        case WitnessKind::Net: return "net";
        case WitnessKind::Sun3: return "sun3";
        case WitnessKind::Hole: return "hole";
    }
    return "?";
}

struct ReversibilityCertificate {
    bool reversible = false;
    WitnessKind kind = WitnessKind::Ordering;
    VertexOrdering ordering;    // when reversible
    std::vector<int> witness;   // structure vertices in role order (see below)
};

namespace detail {

// Witness role orders: claw = [center, leaf, leaf, leaf]; net =
// [a, b, c, a', b', c'] with triangle abc and pendants aligned; sun3 =
// [a, b, c, x_ab, y_bc, z_ca] with inner triangle abc.

inline std::optional<std::vector<int>> find_claw(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        size_t d = nb.size();
        for (size_t i = 0; i < d; ++i)
            for (size_t j = i + 1; j < d; ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                for (size_t l = j + 1; l < d; ++l) {
                    if (g.has_edge(nb[i], nb[l]) || g.has_edge(nb[j], nb[l])) continue;
                    return std::vector<int>{v, nb[i], nb[j], nb[l]};
                }
            }
    }
    return std::nullopt;
}

template <typename Fn>
inline void for_each_triangle(const Graph& g, Fn&& fn) {
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b : g.neighbors(a)) {
            if (b <= a) continue;
            for (int c : g.neighbors(b)) {
                if (c <= b || !g.has_edge(a, c)) continue;
                if (fn(a, b, c)) return;
            }
        }
}

inline std::optional<std::vector<int>> find_net(const Graph& g) {
    std::optional<std::vector<int>> out;
    for_each_triangle(g, [&](int a, int b, int c) {
        int tri[3] = {a, b, c};
        std::vector<int> pend[3];
        for (int i = 0; i < 3; ++i) {
            int u = tri[i], v1 = tri[(i + 1) % 3], v2 = tri[(i + 2) % 3];
            for (int w : g.neighbors(u))
                if (w != v1 && w != v2 && !g.has_edge(w, v1) && !g.has_edge(w, v2))
                    pend[i].push_back(w);
        }
        for (int pa : pend[0])
            for (int pb : pend[1]) {
                if (g.has_edge(pa, pb)) continue;
                for (int pc : pend[2]) {
                    if (g.has_edge(pa, pc) || g.has_edge(pb, pc)) continue;
                    out = std::vector<int>{a, b, c, pa, pb, pc};
                    return true;
                }
            }
        return false;
    });
    return out;
}

inline std::optional<std::vector<int>> find_sun3(const Graph& g) {
    std::optional<std::vector<int>> out;
    for_each_triangle(g, [&](int a, int b, int c) {
        auto outers = [&](int u, int v, int w) {  // adjacent to u,v and not w
            std::vector<int> res;
            for (int x : g.neighbors(u))
                if (x != v && x != w && g.has_edge(x, v) && !g.has_edge(x, w)) res.push_back(x);
            return res;
        };
        for (int x : outers(a, b, c))
            for (int y : outers(b, c, a)) {
                if (g.has_edge(x, y)) continue;
                for (int z : outers(c, a, b)) {
                    if (g.has_edge(x, z) || g.has_edge(y, z)) continue;
                    out = std::vector<int>{a, b, c, x, y, z};
                    return true;
                }
            }
        return false;
    });
    return out;
}

// Proper-interval ("umbrella") ordering test: every closed neighborhood
// must occupy consecutive positions.
inline bool is_umbrella_ordering(const Graph& g, const VertexOrdering& ord) {
    int n = g.vertex_count();
    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(ord[static_cast<size_t>(i)])] = i;
    for (int v = 0; v < n; ++v) {
        int lo = pos[static_cast<size_t>(v)], hi = pos[static_cast<size_t>(v)];
        for (int w : g.neighbors(v)) {
            lo = std::min(lo, pos[static_cast<size_t>(w)]);
            hi = std::max(hi, pos[static_cast<size_t>(w)]);
        }
        if (hi - lo != g.degree(v)) return false;
    }
    return true;
}

}  // namespace detail

// Proper-interval recognition with certificates. Positive: an umbrella
// ordering computed by three LexBFS sweeps and re-verified to be
// reversible. Negative: a hole when the graph is not chordal, otherwise
// an induced claw, net or 3-sun.
inline ReversibilityCertificate find_reversible_ordering(const Graph& g) {
    require_connected(g, "find_reversible_ordering");
    ReversibilityCertificate cert;
    if (g.vertex_count() == 0) {
        cert.reversible = true;
        return cert;
    }
    ChordalityCertificate ch = is_chordal(g);
    if (!ch.chordal) {
        cert.reversible = false;
        cert.kind = WitnessKind::Hole;
        cert.witness = ch.hole;
        return cert;
    }
    VertexOrdering s1 = lexbfs(g, 0);
    VertexOrdering s2 = lexbfs_plus(g, s1);
    VertexOrdering s3 = lexbfs_plus(g, s2);
    if (detail::is_umbrella_ordering(g, s3)) {
        if (!is_reversible_ordering(g, s3).ok)
            throw InternalError("find_reversible_ordering: umbrella ordering is not reversible");
        cert.reversible = true;
        cert.kind = WitnessKind::Ordering;
        cert.ordering = std::move(s3);
        return cert;
    }
    cert.reversible = false;
    if (auto w = detail::find_claw(g)) {
        cert.kind = WitnessKind::Claw;
        cert.witness = *w;
        return cert;
    }
    if (auto w = detail::find_net(g)) {
        cert.kind = WitnessKind::Net;
        cert.witness = *w;
        return cert;
    }
    if (auto w = detail::find_sun3(g)) {
        cert.kind = WitnessKind::Sun3;
        cert.witness = *w;
        return cert;
    }
    throw InternalError("find_reversible_ordering: no umbrella ordering and no forbidden structure");
}

inline bool is_proper_interval(const Graph& g) { return find_reversible_ordering(g).reversible; }

}  // namespace chordal
