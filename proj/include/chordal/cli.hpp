#pragma once

// Command-line front end. Every subcommand maps onto one library
// operation; exit codes are part of the contract: 0 = positive answer or
// success, 1 = negative structural answer (not chordal, not proper
// interval, cross-check mismatch), 2 = usage, parse or budget error.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chordal/clique_tree.hpp"
#include "chordal/graph.hpp"
#include "chordal/json_io.hpp"
#include "chordal/minmax.hpp"
#include "chordal/oracle.hpp"
#include "chordal/reversible.hpp"
#include "chordal/search.hpp"

namespace chordal::cli {

// Fixed default for every randomized subcommand; no wall-clock seeding.
constexpr uint64_t kDefaultSeed = 12345;

namespace detail {

struct GraphInput {
    std::string path = "-";
    std::string format = "auto";  // auto|edgelist|dimacs
    int component = -1;           // -1: require connectivity at the operation
};

inline void add_graph_options(CLI::App* cmd, GraphInput& in) {
    cmd->add_option("input", in.path, "input file, or - for stdin")->capture_default_str();
    cmd->add_option("--format", in.format, "input format: auto, edgelist, dimacs")
        ->check(CLI::IsMember({"auto", "edgelist", "dimacs"}))
        ->capture_default_str();
    cmd->add_option("--component", in.component,
                    "preprocess: keep only the i-th connected component (0-based)");
}

inline Graph load_graph(const GraphInput& in, std::istream& stdin_stream) {
    std::string text;
    if (in.path == "-") {
        std::ostringstream ss;
        ss << stdin_stream.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(in.path);
        if (!f) throw Error("cannot open input file: " + in.path);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    std::string format = in.format;
    if (format == "auto") {
        format = "edgelist";
        std::istringstream probe(text);
        std::string line;
        while (std::getline(probe, line)) {
            std::istringstream ls(line);
            std::string tok;
            if (!(ls >> tok)) continue;
            if (tok == "p") {
                format = "dimacs";
                break;
            }
            if (tok != "c") break;  // dimacs comments may precede the p-line
        }
    }
    std::istringstream stream(text);
    Graph g = format == "dimacs" ? read_dimacs(stream) : parse_edge_list(stream);
    if (in.component >= 0) {
        auto comps = connected_components(g);
        if (in.component >= static_cast<int>(comps.size()))
            throw PreconditionError("--component index out of range (graph has " +
                                    std::to_string(comps.size()) + " components)");
        g = induced_subgraph(g, VertexSet(comps[static_cast<size_t>(in.component)])).graph;
    }
    return g;
}

inline std::string label_seq(const Graph& g, const std::vector<int>& vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += " ";
        s += g.label(vs[i]);
    }
    return s;
}

inline void attach_label_table(json& j, const Graph& g) {
    if (g.has_labels()) j["vertex_labels"] = g.labels();
}

// Log-log least-squares slope of y against x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double d = static_cast<double>(n) * sxx - sx * sx;
    return (static_cast<double>(n) * sxy - sx * sy) / d;
}

inline size_t graph_bytes(const Graph& g) {
    size_t b = sizeof(Graph);
    for (int v = 0; v < g.vertex_count(); ++v)
        b += sizeof(std::vector<int>) + g.neighbors(v).capacity() * sizeof(int);
    return b;
}

inline size_t tree_bytes(const CliqueTree& t) {
    size_t b = sizeof(CliqueTree);
    for (const auto& c : t.nodes) b += sizeof(VertexSet) + c.values().capacity() * sizeof(int);
    for (const auto& e : t.edges)
        b += sizeof(LabeledEdge) + e.label.values().capacity() * sizeof(int);
    return b;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::istream& in_stream, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"structural analysis of chordal graphs"};
    app.require_subcommand(1);

    detail::GraphInput gin;
    std::string output = "json";
    int start_vertex = 0;
    uint64_t seed = kDefaultSeed;

    // --- check ---------------------------------------------------------
    auto* c_check = app.add_subcommand("check", "chordality test with certificate");
    detail::add_graph_options(c_check, gin);
    c_check->add_option("--output", output, "json or text")->capture_default_str();

    // --- peo -----------------------------------------------------------
    auto* c_peo = app.add_subcommand("peo", "reversed LexBFS order with scheme verification");
    detail::add_graph_options(c_peo, gin);
    c_peo->add_option("--start", start_vertex, "LexBFS start vertex")->capture_default_str();
    c_peo->add_option("--output", output, "json or text")->capture_default_str();

    // --- clique-tree / rcg ----------------------------------------------
    auto* c_tree = app.add_subcommand("clique-tree", "maximal clique tree");
    detail::add_graph_options(c_tree, gin);
    c_tree->add_option("--output", output, "json, dot or text")->capture_default_str();

    auto* c_rcg = app.add_subcommand("rcg", "reduced clique graph");
    detail::add_graph_options(c_rcg, gin);
    c_rcg->add_option("--output", output, "json, dot or text")->capture_default_str();

    // --- separators ------------------------------------------------------
    auto* c_sep = app.add_subcommand("separators", "minimal separator poset");
    detail::add_graph_options(c_sep, gin);
    c_sep->add_option("--output", output, "json or text")->capture_default_str();

    // --- minmax-tree ----------------------------------------------------
    auto* c_mm = app.add_subcommand("minmax-tree",
                                    "clique tree with a pending min-max separator edge");
    detail::add_graph_options(c_mm, gin);
    c_mm->add_option("--output", output, "json or dot")->capture_default_str();

    // --- scheme ----------------------------------------------------------
    auto* c_scheme = app.add_subcommand("scheme", "containment-order elimination scheme");
    detail::add_graph_options(c_scheme, gin);
    c_scheme->add_option("--output", output, "json or text")->capture_default_str();

    // --- reversible ------------------------------------------------------
    auto* c_rev = app.add_subcommand("reversible",
                                     "reversible ordering / proper interval certificate");
    detail::add_graph_options(c_rev, gin);
    c_rev->add_option("--output", output, "json or text")->capture_default_str();

    // --- gen -------------------------------------------------------------
    auto* c_gen = app.add_subcommand("gen", "generate a random connected chordal graph");
    int gen_n = 10;
    double gen_density = 0.5;
    c_gen->add_option("--n", gen_n, "vertex count")->capture_default_str();
    c_gen->add_option("--density", gen_density, "density parameter in (0,1]")->capture_default_str();
    c_gen->add_option("--seed", seed, "generator seed")->capture_default_str();
    c_gen->add_option("--output", output, "edgelist, dot or json")->default_val("edgelist");

    // --- search ----------------------------------------------------------
    auto* c_search = app.add_subcommand("search", "counterexample search over a graph corpus");
    std::string search_kind = "no-minmax-terminal";
    int exhaustive_n = 0;
    int random_count = 0;
    int random_n = 10;
    double random_density = 0.5;
    int workers = 0;
    c_search->add_option("--kind", search_kind, "no-minmax-terminal or no-minmin-pending")
        ->check(CLI::IsMember({"no-minmax-terminal", "no-minmin-pending"}))
        ->capture_default_str();
    c_search->add_option("--exhaustive-n", exhaustive_n,
                         "exhaustive corpus: all connected graphs with n <= this");
    c_search->add_option("--random-count", random_count, "random corpus: number of graphs");
    c_search->add_option("--n", random_n, "random corpus: vertices per graph")->capture_default_str();
    c_search->add_option("--density", random_density, "random corpus: density")->capture_default_str();
    c_search->add_option("--seed", seed, "random corpus: seed")->capture_default_str();
    c_search->add_option("--workers", workers, "worker threads (0 = hardware)")->capture_default_str();

    // --- verify ------------------------------------------------------------
    auto* c_verify = app.add_subcommand("verify", "oracle cross-check of every operation");
    detail::add_graph_options(c_verify, gin);

    // --- bench --------------------------------------------------------------
    auto* c_bench = app.add_subcommand("bench", "near-linearity benchmark of the pending-tree build");
    std::vector<long> bench_edges{10000, 100000, 1000000};
    double bench_max_slope = 1.3;
    c_bench->add_option("--edges", bench_edges, "target edge counts")->capture_default_str();
    c_bench->add_option("--seed", seed, "generator seed")->capture_default_str();
    c_bench->add_option("--max-slope", bench_max_slope, "log-log slope bound")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*c_check) {
            Graph g = detail::load_graph(gin, in_stream);
            ChordalityCertificate cert = is_chordal(g);
            if (output == "text") {
                if (cert.chordal)
                    out << "chordal; elimination scheme: " << detail::label_seq(g, cert.scheme) << "\n";
                else
                    out << "not chordal; hole: " << detail::label_seq(g, cert.hole) << "\n";
            } else {
                json j = to_json(cert);
                detail::attach_label_table(j, g);
                out << j.dump(2) << "\n";
            }
            return cert.chordal ? 0 : 1;
        }

        if (*c_peo) {
            Graph g = detail::load_graph(gin, in_stream);
            VertexOrdering order = lexbfs(g, start_vertex);
            VertexOrdering scheme(order.rbegin(), order.rend());
            SchemeCheck chk = is_simplicial_elimination_scheme(g, scheme);
            if (output == "text") {
                out << detail::label_seq(g, scheme) << "\n";
                if (!chk.ok)
                    out << "not a simplicial elimination scheme: position " << chk.position
                        << ", non-adjacent later neighbors " << g.label(chk.witness_u) << ","
                        << g.label(chk.witness_v) << "\n";
            } else {
                json j;
                j["order"] = scheme;
                j["is_scheme"] = chk.ok;
                if (!chk.ok)
                    j["violation"] = {{"position", chk.position},
                                      {"pair", {chk.witness_u, chk.witness_v}}};
                detail::attach_label_table(j, g);
                out << j.dump(2) << "\n";
            }
            return chk.ok ? 0 : 1;
        }

        auto emit_not_chordal = [&](const NotChordalError& e, const Graph& g) {
            json j;
            j["chordal"] = false;
            j["hole"] = e.hole();
            detail::attach_label_table(j, g);
            out << j.dump(2) << "\n";
            return 1;
        };

        if (*c_tree) {
            Graph g = detail::load_graph(gin, in_stream);
            try {
                CliqueTree t = build_clique_tree(g);
                if (output == "dot") {
                    write_dot(t, g, out);
                } else if (output == "text") {
                    for (size_t i = 0; i < t.nodes.size(); ++i)
                        out << "clique " << i << ": " << detail::label_seq(g, t.nodes[i].values())
                            << "\n";
                    for (const auto& e : t.edges)
                        out << "edge " << e.a << " -- " << e.b << " separator "
                            << detail::label_seq(g, e.label.values()) << "\n";
                } else {
                    json j = to_json(t);
                    detail::attach_label_table(j, g);
                    out << j.dump(2) << "\n";
                }
                return 0;
            } catch (const NotChordalError& e) {
                return emit_not_chordal(e, g);
            }
        }

        if (*c_rcg) {
            Graph g = detail::load_graph(gin, in_stream);
            try {
                ReducedCliqueGraph r = reduced_clique_graph(g);
                if (output == "dot") {
                    write_dot(r, g, out);
                } else if (output == "text") {
                    for (size_t i = 0; i < r.nodes.size(); ++i)
                        out << "clique " << i << ": " << detail::label_seq(g, r.nodes[i].values())
                            << "\n";
                    for (const auto& e : r.edges)
                        out << "edge " << e.a << " -- " << e.b << " separator "
                            << detail::label_seq(g, e.label.values()) << "\n";
                } else {
                    json j = to_json(r);
                    detail::attach_label_table(j, g);
                    out << j.dump(2) << "\n";
                }
                return 0;
            } catch (const NotChordalError& e) {
                return emit_not_chordal(e, g);
            }
        }

        if (*c_sep) {
            Graph g = detail::load_graph(gin, in_stream);
            try {
                SeparatorPoset p = separator_poset(g);
                if (output == "text") {
                    for (size_t i = 0; i < p.separators.size(); ++i)
                        out << detail::label_seq(g, p.separators[i].values()) << "  x"
                            << p.multiplicity[i] << (p.is_min_max[i] ? " min-max" : "")
                            << (p.is_min_min[i] ? " min-min" : "") << "\n";
                } else {
                    json j = to_json(p);
                    detail::attach_label_table(j, g);
                    out << j.dump(2) << "\n";
                }
                return 0;
            } catch (const NotChordalError& e) {
                return emit_not_chordal(e, g);
            }
        }

        if (*c_mm) {
            Graph g = detail::load_graph(gin, in_stream);
            try {
                PendingTreeResult r = pending_minmax_tree(g);
                if (output == "dot") {
                    write_dot(r, g, out);
                } else {
                    json j = to_json(r);
                    detail::attach_label_table(j, g);
                    out << j.dump(2) << "\n";
                }
                return 0;
            } catch (const NotChordalError& e) {
                return emit_not_chordal(e, g);
            }
        }

        if (*c_scheme) {
            Graph g = detail::load_graph(gin, in_stream);
            try {
                ContainmentScheme s = containment_elimination_scheme(g);
                if (output == "text") {
                    out << detail::label_seq(g, s.order) << "\n";
                    for (const auto& st : s.steps)
                        out << "prune " << detail::label_seq(g, st.pruned.values())
                            << " from clique " << detail::label_seq(g, st.clique.values())
                            << " via separator " << detail::label_seq(g, st.separator.values())
                            << "\n";
                } else {
                    json j = to_json(s);
                    detail::attach_label_table(j, g);
                    out << j.dump(2) << "\n";
                }
                return 0;
            } catch (const NotChordalError& e) {
                return emit_not_chordal(e, g);
            }
        }

        if (*c_rev) {
            Graph g = detail::load_graph(gin, in_stream);
            ReversibilityCertificate cert = find_reversible_ordering(g);
            if (output == "text") {
                if (cert.reversible)
                    out << "proper interval; reversible ordering: "
                        << detail::label_seq(g, cert.ordering) << "\n";
                else
                    out << "not proper interval; " << witness_kind_name(cert.kind) << ": "
                        << detail::label_seq(g, cert.witness) << "\n";
            } else {
                json j = to_json(cert);
                detail::attach_label_table(j, g);
                out << j.dump(2) << "\n";
            }
            return cert.reversible ? 0 : 1;
        }

        if (*c_gen) {
            Graph g = generate_random_chordal(gen_n, gen_density, seed);
            if (output == "dot")
                write_dot(g, out);
            else if (output == "json")
                out << graph_to_json(g).dump(2) << "\n";
            else
                write_edge_list(g, out);
            return 0;
        }

        if (*c_search) {
            CounterexampleKind kind = search_kind == "no-minmax-terminal"
                                          ? CounterexampleKind::NoMinmaxTerminal
                                          : CounterexampleKind::NoMinminPending;
            std::vector<Counterexample> found;
            SearchOptions opt;
            opt.workers = workers;
            if (exhaustive_n > 0) {
                oracle::CorpusFilters f;
                f.connected = true;
                f.chordal = true;
                auto spec = oracle::CorpusSpec::exhaustive_up_to(exhaustive_n, f);
                // Buffered hand-off between the enumerator and the pool.
                std::vector<Graph> buffer;
                oracle::enumerate_graphs(spec, [&](const Graph& g) {
                    buffer.push_back(g);
                    return true;
                });
                size_t at = 0;
                found = search_counterexamples(
                    kind,
                    [&]() -> std::optional<Graph> {
                        if (at >= buffer.size()) return std::nullopt;
                        return buffer[at++];
                    },
                    opt);
            } else if (random_count > 0) {
                int i = 0;
                found = search_counterexamples(
                    kind,
                    [&]() -> std::optional<Graph> {
                        if (i >= random_count) return std::nullopt;
                        return generate_random_chordal(random_n, random_density,
                                                       seed + static_cast<uint64_t>(i++));
                    },
                    opt);
            } else {
                err << "search: choose --exhaustive-n or --random-count\n";
                return 2;
            }
            json j;
            j["kind"] = search_kind;
            j["found"] = found.size();
            json inst = json::array();
            for (const auto& ce : found) inst.push_back(to_json(ce));
            j["instances"] = std::move(inst);
            out << j.dump(2) << "\n";
            return 0;
        }

        if (*c_verify) {
            Graph g = detail::load_graph(gin, in_stream);
            require_connected(g, "verify");
            bool all_ok = true;
            json checks = json::array();
            auto report = [&](const std::string& name, const char* status) {
                checks.push_back({{"check", name}, {"status", status}});
                if (std::string(status) == "fail") all_ok = false;
            };

            bool primary_chordal = is_chordal(g).chordal;
            if (g.vertex_count() <= 31)
                report("chordality agrees with greedy elimination",
                       primary_chordal == oracle::chordal(g) ? "pass" : "fail");
            else
                report("chordality agrees with greedy elimination", "skipped (n > 31)");

            if (!primary_chordal) {
                auto hole = is_chordal(g).hole;
                bool ok = hole.size() >= 4;
                for (size_t i = 0; i < hole.size() && ok; ++i)
                    for (size_t l = i + 1; l < hole.size(); ++l) {
                        bool consecutive = (l == i + 1) || (i == 0 && l == hole.size() - 1);
                        if (g.has_edge(hole[i], hole[l]) != consecutive) ok = false;
                    }
                report("hole certificate is a chordless cycle", ok ? "pass" : "fail");
            } else {
                auto cliques = maximal_cliques(g);
                auto sorted = cliques;
                std::sort(sorted.begin(), sorted.end());
                report("maximal cliques agree with Bron-Kerbosch",
                       sorted == oracle::maximal_cliques_brute(g) ? "pass" : "fail");

                CliqueTree t = build_clique_tree(g);
                report("clique tree passes primary verification",
                       verify_clique_tree(g, t).ok ? "pass" : "fail");
                report("clique tree passes oracle verification",
                       oracle::is_valid_clique_tree(g, t) ? "pass" : "fail");

                auto ms = separator_multiset(t);
                std::set<VertexSet> keys;
                for (const auto& [s, c] : ms) keys.insert(s);
                report("separator multiset keys are the minimal separators",
                       keys == oracle::brute_minimal_separators(g) ? "pass" : "fail");

                if (cliques.size() >= 2) {
                    PendingTreeResult r = pending_minmax_tree(g);
                    bool ok = verify_clique_tree(g, r.tree).ok && r.pending_edge.has_value();
                    if (ok) {
                        const auto& pe = r.tree.edges[static_cast<size_t>(*r.pending_edge)];
                        int deg = 0;
                        for (const auto& e : r.tree.edges)
                            if (e.a == r.leaf_node || e.b == r.leaf_node) ++deg;
                        ok = (pe.a == r.leaf_node || pe.b == r.leaf_node) && deg == 1;
                        for (const auto& e : r.tree.edges)
                            if (pe.label.is_proper_subset_of(e.label)) ok = false;
                    }
                    report("pending min-max tree verifies", ok ? "pass" : "fail");

                    if (cliques.size() <= 9) {
                        try {
                            std::set<std::pair<int, int>> union_edges;
                            std::vector<VertexSet> nodes_sorted = sorted;
                            oracle::enumerate_max_clique_trees(g, [&](const CliqueTree& ot) {
                                for (const auto& e : ot.edges) union_edges.insert({e.a, e.b});
                                return true;
                            });
                            ReducedCliqueGraph rcg = reduced_clique_graph(g);
                            std::set<std::pair<int, int>> rcg_edges;
                            std::vector<int> perm(rcg.nodes.size());
                            // oracle trees index cliques in sorted order
                            for (size_t i = 0; i < rcg.nodes.size(); ++i)
                                perm[i] = static_cast<int>(
                                    std::lower_bound(nodes_sorted.begin(), nodes_sorted.end(),
                                                     rcg.nodes[i]) -
                                    nodes_sorted.begin());
                            for (const auto& e : rcg.edges) {
                                int ua = perm[static_cast<size_t>(e.a)],
                                    ub = perm[static_cast<size_t>(e.b)];
                                rcg_edges.insert({std::min(ua, ub), std::max(ua, ub)});
                            }
                            report("reduced clique graph equals union of max clique trees",
                                   rcg_edges == union_edges ? "pass" : "fail");
                        } catch (const BudgetError&) {
                            report("reduced clique graph equals union of max clique trees",
                                   "skipped (tree budget)");
                        }
                    } else {
                        report("reduced clique graph equals union of max clique trees",
                               "skipped (more than 9 cliques)");
                    }
                }

                ContainmentScheme s = containment_elimination_scheme(g);
                report("containment scheme is a simplicial elimination scheme",
                       is_simplicial_elimination_scheme(g, s.order).ok ? "pass" : "fail");
            }

            if (g.vertex_count() <= 31) {
                bool primary_pi = is_proper_interval(g);
                report("proper interval agrees with reversible-ordering search",
                       primary_pi == oracle::has_reversible_ordering(g) ? "pass" : "fail");
            } else {
                report("proper interval agrees with reversible-ordering search",
                       "skipped (n > 31)");
            }

            json j;
            j["ok"] = all_ok;
            j["checks"] = std::move(checks);
            out << j.dump(2) << "\n";
            return all_ok ? 0 : 1;
        }

        if (*c_bench) {
            constexpr int kCliqueParam = 9;  // separator sizes up to 9
            std::vector<double> xs, ts, bs;
            out << "  edges        n     build+pend (s)   bytes\n";
            for (long target : bench_edges) {
                int n = std::max(kCliqueParam + 2, static_cast<int>(2 * target / (kCliqueParam + 1)));
                double density = std::min(1.0, static_cast<double>(kCliqueParam) / (n - 1));
                Graph g = generate_random_chordal(n, density, seed);
                double best = 1e100;
                size_t bytes = 0;
                for (int rep = 0; rep < 3; ++rep) {
                    auto t0 = std::chrono::steady_clock::now();
                    PendingTreeResult r = pending_minmax_tree(g);
                    auto t1 = std::chrono::steady_clock::now();
                    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
                    bytes = detail::graph_bytes(g) + detail::tree_bytes(r.tree);
                }
                xs.push_back(static_cast<double>(g.edge_count()));
                ts.push_back(best);
                bs.push_back(static_cast<double>(bytes));
                out << "  " << g.edge_count() << "  " << n << "  " << best << "  " << bytes << "\n";
            }
            double slope_t = detail::loglog_slope(xs, ts);
            double slope_b = detail::loglog_slope(xs, bs);
            out << "time slope (log-log): " << slope_t << "\n";
            out << "memory slope (log-log): " << slope_b << "\n";
            bool ok = slope_t <= bench_max_slope && ts.back() <= 10.0;
            out << (ok ? "bench: PASS\n" : "bench: FAIL\n");
            return ok ? 0 : 1;
        }
    } catch (const NotChordalError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand selected\n";
    return 2;
}

inline int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(std::move(args), std::cin, std::cout, std::cerr);
}

}  // namespace chordal::cli
