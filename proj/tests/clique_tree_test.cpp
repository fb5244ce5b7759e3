#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "chordal/clique_tree.hpp"
#include "chordal/oracle.hpp"
#include "support/fixtures.hpp"

using namespace chordal;

namespace {

// Two triangles {0,1,2} and {0,3,4} glued through the triangle {0,2,3}:
// the outer cliques intersect in {0}, but {0} does not separate them, so
// that reduced-clique-graph edge is missing.
Graph two_wings() {
    return fixtures::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {2, 3}});
}

std::set<std::pair<int, int>> edge_pairs_in_sorted_order(const std::vector<VertexSet>& nodes,
                                                         const std::vector<LabeledEdge>& edges) {
    std::vector<VertexSet> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    auto pos = [&](const VertexSet& c) {
        return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
    };
    std::set<std::pair<int, int>> out;
    for (const auto& e : edges) {
        int a = pos(nodes[static_cast<size_t>(e.a)]);
        int b = pos(nodes[static_cast<size_t>(e.b)]);
        out.insert({std::min(a, b), std::max(a, b)});
    }
    return out;
}

}  // namespace

TEST(MaximalCliques, Examples) {
    EXPECT_EQ(fixtures::as_multiset(maximal_cliques(fixtures::complete(4))),
              fixtures::as_multiset({VertexSet{0, 1, 2, 3}}));
    EXPECT_EQ(fixtures::as_multiset(maximal_cliques(fixtures::path(4))),
              fixtures::as_multiset({VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{2, 3}}));
    EXPECT_EQ(fixtures::as_multiset(maximal_cliques(fixtures::g1())),
              fixtures::as_multiset({VertexSet{0, 1, 2, 3}, VertexSet{2, 3, 4}, VertexSet{4, 5}}));
}

TEST(MaximalCliques, NonChordalCarriesHole) {
    try {
        maximal_cliques(fixtures::cycle(5));
        FAIL() << "expected NotChordalError";
    } catch (const NotChordalError& e) {
        EXPECT_GE(e.hole().size(), 4u);
    }
}

TEST(MaximalCliques, AgreesWithBronKerbosch) {
    auto spec = oracle::CorpusSpec::exhaustive_up_to(6, {.connected = true, .chordal = true});
    oracle::enumerate_graphs(spec, [&](const Graph& g) {
        auto mine = maximal_cliques(g);
        std::sort(mine.begin(), mine.end());
        EXPECT_EQ(mine, oracle::maximal_cliques_brute(g));
        return true;
    });
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = generate_random_chordal(30, 0.3, 400 + seed);
        auto mine = maximal_cliques(g);
        std::sort(mine.begin(), mine.end());
        EXPECT_EQ(mine, oracle::maximal_cliques_brute(g));
    }
}

TEST(BuildCliqueTree, SingleCliqueHasNoEdges) {
    CliqueTree t = build_clique_tree(fixtures::complete(4));
    ASSERT_EQ(t.nodes.size(), 1u);
    EXPECT_TRUE(t.edges.empty());
    EXPECT_TRUE(verify_clique_tree(fixtures::complete(4), t).ok);
}

TEST(BuildCliqueTree, G1IsThePathWithExpectedSeparators) {
    Graph g = fixtures::g1();
    CliqueTree t = build_clique_tree(g);
    ASSERT_EQ(t.nodes.size(), 3u);
    ASSERT_EQ(t.edges.size(), 2u);
    EXPECT_TRUE(verify_clique_tree(g, t).ok);
    SeparatorMultiset ms = separator_multiset(t);
    SeparatorMultiset want{{VertexSet{2, 3}, 1}, {VertexSet{4}, 1}};
    EXPECT_EQ(ms, want);
}

TEST(BuildCliqueTree, ThreeTrianglesShareLabelMultiset) {
    Graph g = fixtures::three_triangles();
    CliqueTree t = build_clique_tree(g);
    ASSERT_EQ(t.nodes.size(), 3u);
    EXPECT_TRUE(verify_clique_tree(g, t).ok);
    SeparatorMultiset want{{VertexSet{0}, 2}};
    EXPECT_EQ(separator_multiset(t), want);
}

TEST(BuildCliqueTree, ValidOnExhaustiveAndRandomCorpus) {
    auto spec = oracle::CorpusSpec::exhaustive_up_to(6, {.connected = true, .chordal = true});
    oracle::enumerate_graphs(spec, [&](const Graph& g) {
        CliqueTree t = build_clique_tree(g);
        TreeVerification v = verify_clique_tree(g, t);
        EXPECT_TRUE(v.ok) << v.violation;
        EXPECT_TRUE(oracle::is_valid_clique_tree(g, t));
        return true;
    });
    for (uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = generate_random_chordal(40, 0.25, 700 + seed);
        CliqueTree t = build_clique_tree(g);
        TreeVerification v = verify_clique_tree(g, t);
        EXPECT_TRUE(v.ok) << v.violation;
        EXPECT_TRUE(oracle::is_valid_clique_tree(g, t));
    }
}

TEST(SeparatorMultiset, EmptyForCompleteGraph) {
    EXPECT_TRUE(separator_multiset(build_clique_tree(fixtures::complete(4))).empty());
}

TEST(SeparatorMultiset, KeysAreTheMinimalSeparators) {
    auto spec = oracle::CorpusSpec::exhaustive_up_to(6, {.connected = true, .chordal = true});
    oracle::enumerate_graphs(spec, [&](const Graph& g) {
        CliqueTree t = build_clique_tree(g);
        SeparatorMultiset ms = separator_multiset(t);
        std::set<VertexSet> keys;
        int total = 0;
        for (const auto& [s, c] : ms) {
            keys.insert(s);
            total += c;
        }
        EXPECT_EQ(total, static_cast<int>(t.nodes.size()) - 1);
        EXPECT_EQ(keys, oracle::brute_minimal_separators(g));
        return true;
    });
}

TEST(VerifyCliqueTree, RejectsSwappedEdge) {
    Graph g = fixtures::g1();
    CliqueTree t = build_clique_tree(g);
    // Re-attach {4,5} to the K4 instead of {2,3,4}.
    for (auto& e : t.edges) {
        const VertexSet ef{4, 5};
        if (t.nodes[static_cast<size_t>(e.a)] == ef || t.nodes[static_cast<size_t>(e.b)] == ef) {
            int k4 = -1;
            for (size_t i = 0; i < t.nodes.size(); ++i)
                if (t.nodes[i].size() == 4) k4 = static_cast<int>(i);
            int ef_node = t.nodes[static_cast<size_t>(e.a)] == ef ? e.a : e.b;
            e.a = k4;
            e.b = ef_node;
            e.label = t.nodes[static_cast<size_t>(k4)].intersect(t.nodes[static_cast<size_t>(ef_node)]);
        }
    }
    EXPECT_FALSE(verify_clique_tree(g, t).ok);
}

TEST(VerifyCliqueTree, RejectsSubmaximalSpanningTree) {
    // nested_separators has clique intersections {0,1}, {0}, {0}; dropping
    // the weight-2 edge gives a spanning tree of weight 2 instead of 3.
    Graph g = fixtures::nested_separators();
    auto cliques = maximal_cliques(g);
    ASSERT_EQ(cliques.size(), 3u);
    int c_k4 = -1, c_aby = -1, c_az = -1;
    for (size_t i = 0; i < cliques.size(); ++i) {
        if (cliques[i].size() == 4) c_k4 = static_cast<int>(i);
        if (cliques[i].size() == 3) c_aby = static_cast<int>(i);
        if (cliques[i].size() == 2) c_az = static_cast<int>(i);
    }
    CliqueTree bad;
    bad.nodes = cliques;
    bad.edges.push_back({c_k4, c_az, cliques[static_cast<size_t>(c_k4)].intersect(
                                         cliques[static_cast<size_t>(c_az)])});
    bad.edges.push_back({c_aby, c_az, cliques[static_cast<size_t>(c_aby)].intersect(
                                          cliques[static_cast<size_t>(c_az)])});
    EXPECT_FALSE(verify_clique_tree(g, bad).ok);
    EXPECT_FALSE(oracle::is_valid_clique_tree(g, bad));
}

TEST(VerifyCliqueTree, RejectsNonChordalGraph) {
    CliqueTree t;
    EXPECT_FALSE(verify_clique_tree(fixtures::cycle(4), t).ok);
}

TEST(ReducedCliqueGraph, SingleNodeForComplete) {
    ReducedCliqueGraph r = reduced_clique_graph(fixtures::complete(4));
    EXPECT_EQ(r.nodes.size(), 1u);
    EXPECT_TRUE(r.edges.empty());
}

TEST(ReducedCliqueGraph, G1EqualsItsUniqueTree) {
    Graph g = fixtures::g1();
    ReducedCliqueGraph r = reduced_clique_graph(g);
    CliqueTree t = build_clique_tree(g);
    EXPECT_EQ(edge_pairs_in_sorted_order(r.nodes, r.edges),
              edge_pairs_in_sorted_order(t.nodes, t.edges));
}

TEST(ReducedCliqueGraph, IntersectingCliquesMayLackAnEdge) {
    Graph g = two_wings();
    ASSERT_TRUE(is_chordal(g).chordal);
    ReducedCliqueGraph r = reduced_clique_graph(g);
    ASSERT_EQ(r.nodes.size(), 3u);
    const VertexSet left{0, 1, 2}, right{0, 3, 4};
    int il = -1, ir = -1;
    for (size_t i = 0; i < r.nodes.size(); ++i) {
        if (r.nodes[i] == left) il = static_cast<int>(i);
        if (r.nodes[i] == right) ir = static_cast<int>(i);
    }
    ASSERT_NE(il, -1);
    ASSERT_NE(ir, -1);
    EXPECT_FALSE(left.intersect(right).empty());
    for (const auto& e : r.edges)
        EXPECT_FALSE((e.a == il && e.b == ir) || (e.a == ir && e.b == il))
            << "edge between intersecting-but-unseparated cliques must be absent";
    EXPECT_EQ(r.edges.size(), 2u);
}

TEST(ReducedCliqueGraph, DefinitionHoldsForAllRepresentativePairs) {
    // The single-representative test must agree with quantifying over all
    // pairs x in C-S, y in C'-S.
    auto spec = oracle::CorpusSpec::exhaustive_up_to(6, {.connected = true, .chordal = true});
    oracle::enumerate_graphs(spec, [&](const Graph& g) {
        ReducedCliqueGraph r = reduced_clique_graph(g);
        std::set<std::pair<int, int>> present;
        for (const auto& e : r.edges) present.insert({std::min(e.a, e.b), std::max(e.a, e.b)});
        for (int i = 0; i < static_cast<int>(r.nodes.size()); ++i)
            for (int j = i + 1; j < static_cast<int>(r.nodes.size()); ++j) {
                VertexSet s = r.nodes[static_cast<size_t>(i)].intersect(r.nodes[static_cast<size_t>(j)]);
                if (s.empty()) continue;
                bool all = true, any = false;
                for (int x : r.nodes[static_cast<size_t>(i)].minus(s))
                    for (int y : r.nodes[static_cast<size_t>(j)].minus(s)) {
                        bool sep = separates(g, s, x, y);
                        all = all && sep;
                        any = any || sep;
                    }
                EXPECT_EQ(all, any);  // separation is all-or-nothing
                EXPECT_EQ(present.count({i, j}) == 1, all);
            }
        return true;
    });
}

// Proposition 1 on a small corpus (the acceptance suite runs it at n <= 7
// plus large random graphs): the reduced clique graph is the union of all
// maximum spanning trees, every maximum spanning tree is a valid clique
// tree, every junction tree is maximum, and all of them share one
// separator multiset.
TEST(Proposition1, SmallExhaustive) {
    auto spec = oracle::CorpusSpec::exhaustive_up_to(6, {.connected = true, .chordal = true});
    oracle::enumerate_graphs(spec, [&](const Graph& g) {
        CliqueTree mine = build_clique_tree(g);
        SeparatorMultiset want_ms = separator_multiset(mine);
        std::set<std::pair<int, int>> union_edges;
        long long best_weight = -1;
        oracle::enumerate_max_clique_trees(g, [&](const CliqueTree& t) {
            EXPECT_TRUE(verify_clique_tree(g, t).ok);
            EXPECT_TRUE(oracle::is_valid_clique_tree(g, t));
            EXPECT_EQ(separator_multiset(t), want_ms);
            best_weight = total_label_weight(t.edges);
            for (const auto& e : t.edges) union_edges.insert({e.a, e.b});
            return true;
        });
        ReducedCliqueGraph r = reduced_clique_graph(g);
        EXPECT_EQ(edge_pairs_in_sorted_order(r.nodes, r.edges), union_edges);
        oracle::enumerate_clique_spanning_trees(
            g,
            [&](const CliqueTree& t) {
                if (oracle::is_junction_tree(g, t))
                    EXPECT_EQ(total_label_weight(t.edges), best_weight);
                return true;
            },
            false);
        return true;
    });
}

TEST(CliqueTreeDot, HighlightsAndLabels) {
    Graph g = fixtures::g1_labeled();
    CliqueTree t = build_clique_tree(g);
    std::ostringstream out;
    write_dot(t, g, out, 0);
    std::string s = out.str();
    EXPECT_NE(s.find("color=red"), std::string::npos);
    EXPECT_NE(s.find("{a,b,c,d}"), std::string::npos);
}
