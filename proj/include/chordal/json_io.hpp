#pragma once

// JSON encodings for the library's result types. Field names are part of
// the tool's output contract; tests round-trip through these.

#include <string>
#include <vector>

#include "json.hpp"

#include "chordal/clique_tree.hpp"
#include "chordal/graph.hpp"
#include "chordal/minmax.hpp"
#include "chordal/reversible.hpp"
#include "chordal/search.hpp"
#include "chordal/tree_types.hpp"

namespace chordal {

using json = nlohmann::json;

inline json to_json(const VertexSet& s) { return json(s.values()); }

inline json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.has_labels()) j["labels"] = g.labels();
    return j;
}

inline Graph graph_from_json(const json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Graph(j.at("n").get<int>(), edges, std::move(labels));
}

// Shared shape for clique trees and reduced clique graphs:
// {"nodes": [[vertex...]...], "edges": [[a,b]...], "labels": [[vertex...]...]}
inline json clique_graph_to_json(const std::vector<VertexSet>& nodes,
                                 const std::vector<LabeledEdge>& edges) {
    json j;
    json jn = json::array(), je = json::array(), jl = json::array();
    for (const auto& c : nodes) jn.push_back(c.values());
    for (const auto& e : edges) {
        je.push_back({e.a, e.b});
        jl.push_back(e.label.values());
    }
    j["nodes"] = std::move(jn);
    j["edges"] = std::move(je);
    j["labels"] = std::move(jl);
    return j;
}

inline json to_json(const CliqueTree& t) { return clique_graph_to_json(t.nodes, t.edges); }
inline json to_json(const ReducedCliqueGraph& r) { return clique_graph_to_json(r.nodes, r.edges); }

inline CliqueTree clique_tree_from_json(const json& j) {
    CliqueTree t;
    for (const auto& c : j.at("nodes")) t.nodes.push_back(VertexSet(c.get<std::vector<int>>()));
    const auto& je = j.at("edges");
    const auto& jl = j.at("labels");
    for (size_t i = 0; i < je.size(); ++i)
        t.edges.push_back({je[i].at(0).get<int>(), je[i].at(1).get<int>(),
                           VertexSet(jl[i].get<std::vector<int>>())});
    return t;
}

inline json to_json(const SeparatorMultiset& ms) {
    json j = json::array();
    for (const auto& [s, count] : ms) j.push_back({{"separator", s.values()}, {"count", count}});
    return j;
}

inline json to_json(const SeparatorPoset& p) {
    json j;
    json seps = json::array();
    for (size_t i = 0; i < p.separators.size(); ++i) {
        seps.push_back({{"separator", p.separators[i].values()},
                        {"multiplicity", p.multiplicity[i]},
                        {"min_max", static_cast<bool>(p.is_min_max[i])},
                        {"min_min", static_cast<bool>(p.is_min_min[i])}});
    }
    j["separators"] = std::move(seps);
    json hasse = json::array();
    for (auto [a, b] : p.hasse) hasse.push_back({a, b});
    j["hasse"] = std::move(hasse);
    return j;
}

inline json to_json(const ChordalityCertificate& c) {
    json j;
    j["chordal"] = c.chordal;
    if (c.chordal)
        j["scheme"] = c.scheme;
    else
        j["hole"] = c.hole;
    return j;
}

inline json to_json(const PendingTreeResult& r) {
    json j;
    j["tree"] = to_json(r.tree);
    if (r.pending_edge) {
        j["pending_edge"] = *r.pending_edge;
        j["leaf"] = r.leaf_node;
        j["separator"] = r.tree.edges[static_cast<size_t>(*r.pending_edge)].label.values();
    } else {
        j["no_separators"] = true;
    }
    json log = json::array();
    for (const auto& x : r.transform_log)
        log.push_back({{"removed", {x.removed.first, x.removed.second}},
                       {"added", {x.added.first, x.added.second}}});
    j["transform_log"] = std::move(log);
    j["traversals"] = r.traversals;
    j["restarts"] = r.restarts;
    return j;
}

inline json to_json(const ContainmentScheme& s) {
    json j;
    j["order"] = s.order;
    json steps = json::array();
    for (const auto& st : s.steps)
        steps.push_back({{"clique", st.clique.values()},
                         {"separator", st.separator.values()},
                         {"pruned", st.pruned.values()}});
    j["steps"] = std::move(steps);
    return j;
}

// {"kind": ordering|claw|net|sun3|hole, "vertices": [...]}
inline json to_json(const ReversibilityCertificate& c) {
    json j;
    j["kind"] = witness_kind_name(c.kind);
    j["vertices"] = c.reversible ? c.ordering : c.witness;
    return j;
}

inline json to_json(const Counterexample& ce) {
    json j;
    json edge_list = json::array();
    for (auto [u, v] : ce.graph.edges()) edge_list.push_back({u, v});
    j["graph"] = std::move(edge_list);
    j["n"] = ce.graph.vertex_count();
    j["kind"] = ce.kind == CounterexampleKind::NoMinmaxTerminal ? "no-minmax-terminal"
                                                                : "no-minmin-pending";
    json ev;
    if (ce.kind == CounterexampleKind::NoMinmaxTerminal) {
        ev["minmax_simplicial"] = ce.minmax_simplicial.values();
        json rows = json::array();
        for (const auto& r : ce.terminals)
            rows.push_back({{"start", r.start},
                            {"lexbfs_terminal", r.lexbfs_terminal},
                            {"mcs_terminal", r.mcs_terminal}});
        ev["terminals"] = std::move(rows);
    } else {
        json cl = json::array();
        for (const auto& c : ce.cliques) cl.push_back(c.values());
        ev["cliques"] = std::move(cl);
        json mm = json::array();
        for (const auto& s : ce.min_min_separators) mm.push_back(s.values());
        ev["min_min_separators"] = std::move(mm);
        json pl = json::array();
        for (const auto& s : ce.pending_labels_of_leafable_cliques) pl.push_back(s.values());
        ev["pending_labels_of_leafable_cliques"] = std::move(pl);
    }
    j["evidence"] = std::move(ev);
    return j;
}

}  // namespace chordal
