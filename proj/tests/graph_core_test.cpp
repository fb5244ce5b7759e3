#include <sstream>

#include <gtest/gtest.h>

#include "chordal/graph.hpp"
#include "chordal/oracle.hpp"
#include "chordal/search.hpp"
#include "support/fixtures.hpp"

using namespace chordal;

TEST(ParseEdgeList, BuildsP3) {
    Graph g = parse_edge_list("a b\nb c");
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_TRUE(g.has_edge(0, 1));
    EXPECT_TRUE(g.has_edge(1, 2));
    EXPECT_FALSE(g.has_edge(0, 2));
    EXPECT_EQ(g.label(0), "a");
    EXPECT_EQ(g.label(2), "c");
}

TEST(ParseEdgeList, EmptyInput) {
    Graph g = parse_edge_list("");
    EXPECT_EQ(g.vertex_count(), 0);
    EXPECT_EQ(g.edge_count(), 0u);
}

TEST(ParseEdgeList, DuplicateEdgesAreIdempotent) {
    Graph g = parse_edge_list("a b\na b");
    EXPECT_EQ(g.vertex_count(), 2);
    EXPECT_EQ(g.edge_count(), 1u);
}

TEST(ParseEdgeList, CommentsAndBlanksSkipped) {
    Graph g = parse_edge_list("# header\n\na b\n# tail\nb c\n");
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edge_count(), 2u);
}

TEST(ParseEdgeList, MalformedLineReportsLineNumber) {
    try {
        parse_edge_list("a b\nc\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
    }
}

TEST(ParseEdgeList, SelfLoopRejected) {
    EXPECT_THROW(parse_edge_list("a a"), ParseError);
}

TEST(ParseEdgeList, LabelIdsFollowFirstAppearance) {
    Graph g = parse_edge_list("x y\nz x");
    EXPECT_EQ(g.label(0), "x");
    EXPECT_EQ(g.label(1), "y");
    EXPECT_EQ(g.label(2), "z");
}

TEST(Dimacs, ReadsPEdgeFormat) {
    std::istringstream in("c comment\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    Graph g = read_dimacs(in);
    EXPECT_EQ(g.vertex_count(), 4);
    EXPECT_EQ(g.edge_count(), 3u);
    EXPECT_TRUE(g.has_edge(0, 1));
    EXPECT_TRUE(g.has_edge(2, 3));
}

TEST(Dimacs, RejectsBadHeader) {
    std::istringstream in("p vertex 4 3\n");
    EXPECT_THROW(read_dimacs(in), ParseError);
}

TEST(GraphInvariants, AdjacencySymmetricAndLoopFree) {
    Graph g = fixtures::g1();
    for (int u = 0; u < g.vertex_count(); ++u) {
        EXPECT_FALSE(g.has_edge(u, u));
        for (int v : g.neighbors(u)) EXPECT_TRUE(g.has_edge(v, u));
    }
    EXPECT_THROW(Graph(3, {{0, 0}}), PreconditionError);
    EXPECT_THROW(Graph(3, {{0, 5}}), PreconditionError);
}

TEST(IsClique, Basics) {
    Graph k3 = fixtures::complete(3);
    EXPECT_TRUE(is_clique(k3, VertexSet{0, 1, 2}));
    Graph p3 = fixtures::path(3);
    EXPECT_FALSE(is_clique(p3, VertexSet{0, 2}));
    EXPECT_TRUE(is_clique(p3, VertexSet{}));
    EXPECT_TRUE(is_clique(p3, VertexSet{1}));
}

TEST(Separates, Basics) {
    Graph p3 = fixtures::path(3);
    EXPECT_TRUE(separates(p3, VertexSet{1}, 0, 2));
    Graph k3 = fixtures::complete(3);
    EXPECT_FALSE(separates(k3, VertexSet{0}, 1, 2));
    Graph p4 = fixtures::path(4);
    EXPECT_TRUE(separates(p4, VertexSet{1, 2}, 0, 3));
    EXPECT_THROW(separates(p4, VertexSet{1}, 1, 3), PreconditionError);
}

TEST(MinimalSeparator, Basics) {
    Graph p3 = fixtures::path(3);
    EXPECT_TRUE(is_minimal_separator(p3, VertexSet{1}));
    // {1,2} separates 0 from 3 in P4 but {1} already separates them.
    Graph p4 = fixtures::path(4);
    EXPECT_FALSE(is_minimal_separator(p4, VertexSet{1, 2}));
    Graph k4 = fixtures::complete(4);
    EXPECT_FALSE(is_minimal_separator(k4, VertexSet{0}));
    EXPECT_FALSE(is_minimal_separator(k4, VertexSet{0, 1}));
    EXPECT_FALSE(is_minimal_separator(k4, VertexSet{0, 1, 2}));
}

TEST(MinimalSeparator, RejectsDisconnected) {
    Graph g(4, {{0, 1}, {2, 3}});
    EXPECT_THROW(is_minimal_separator(g, VertexSet{1}), PreconditionError);
}

// separates() agrees with reachability on an explicitly built induced
// subgraph, exhaustively for n <= 5 over all graphs, separators and pairs.
TEST(Separates, AgreesWithInducedSubgraphReachability) {
    auto spec = oracle::CorpusSpec::exhaustive_up_to(5);
    spec.filters.connected = false;
    oracle::enumerate_graphs(spec, [&](const Graph& g) {
        int n = g.vertex_count();
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> sv;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) sv.push_back(v);
            VertexSet s = VertexSet::from_sorted(sv);
            std::vector<int> keep;
            for (int v = 0; v < n; ++v)
                if (!s.contains(v)) keep.push_back(v);
            InducedSubgraph sub = induced_subgraph(g, VertexSet::from_sorted(keep));
            for (int a = 0; a < n; ++a) {
                if (s.contains(a)) continue;
                for (int b = a + 1; b < n; ++b) {
                    if (s.contains(b)) continue;
                    int ia = -1, ib = -1;
                    for (size_t i = 0; i < sub.original_id.size(); ++i) {
                        if (sub.original_id[i] == a) ia = static_cast<int>(i);
                        if (sub.original_id[i] == b) ib = static_cast<int>(i);
                    }
                    bool reach = oracle::reachable_avoiding(sub.graph, ia, ib, {});
                    EXPECT_EQ(separates(g, s, a, b), !reach);
                }
            }
        }
        return true;
    });
}

// is_minimal_separator agrees with the subset-enumeration oracle on every
// connected graph with n <= 5 and every candidate subset.
TEST(MinimalSeparator, AgreesWithSubsetBruteForce) {
    auto spec = oracle::CorpusSpec::exhaustive_up_to(5);
    oracle::enumerate_graphs(spec, [&](const Graph& g) {
        auto truth = oracle::brute_minimal_separators_subsets(g);
        int n = g.vertex_count();
        for (uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> sv;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) sv.push_back(v);
            VertexSet s = VertexSet::from_sorted(sv);
            EXPECT_EQ(is_minimal_separator(g, s), truth.count(s) == 1)
                << "graph edges " << g.edge_count() << " set " << s.to_string();
        }
        return true;
    });
}

// Same agreement on larger random chordal graphs.
TEST(MinimalSeparator, AgreesWithBruteForceOnRandomChordal) {
    for (int i = 0; i < 20; ++i) {
        Graph g = generate_random_chordal(8, 0.4, 1000 + static_cast<uint64_t>(i));
        auto truth = oracle::brute_minimal_separators_subsets(g);
        for (uint32_t mask = 1; mask < (1u << 8); ++mask) {
            std::vector<int> sv;
            for (int v = 0; v < 8; ++v)
                if (mask & (1u << v)) sv.push_back(v);
            VertexSet s = VertexSet::from_sorted(sv);
            EXPECT_EQ(is_minimal_separator(g, s), truth.count(s) == 1);
        }
    }
}

TEST(RandomChordal, SingleVertex) {
    Graph g = generate_random_chordal(1, 0.5, 7);
    EXPECT_EQ(g.vertex_count(), 1);
    EXPECT_EQ(g.edge_count(), 0u);
}

TEST(RandomChordal, OutputIsConnectedChordalAndDeterministic) {
    for (uint64_t seed : {1ull, 2ull, 99ull}) {
        for (int n : {2, 5, 17, 40}) {
            Graph g = generate_random_chordal(n, 0.4, seed);
            EXPECT_TRUE(is_connected(g));
            EXPECT_TRUE(is_chordal(g).chordal);
            Graph h = generate_random_chordal(n, 0.4, seed);
            EXPECT_EQ(g.edges(), h.edges());
        }
    }
}

TEST(Components, SplitAndCount) {
    Graph g(5, {{0, 1}, {2, 3}});
    auto comps = connected_components(g);
    ASSERT_EQ(comps.size(), 3u);
    EXPECT_EQ(comps[0], (std::vector<int>{0, 1}));
    EXPECT_EQ(comps[1], (std::vector<int>{2, 3}));
    EXPECT_EQ(comps[2], (std::vector<int>{4}));
    EXPECT_FALSE(is_connected(g));
}

TEST(Dot, WritesAllEdges) {
    std::ostringstream out;
    write_dot(fixtures::path(3), out);
    std::string s = out.str();
    EXPECT_NE(s.find("graph G {"), std::string::npos);
    EXPECT_NE(s.find("0 -- 1"), std::string::npos);
    EXPECT_NE(s.find("1 -- 2"), std::string::npos);
}

TEST(VertexSetOps, SubsetIntersectUnion) {
    VertexSet a{1, 3, 5};
    VertexSet b{1, 2, 3, 5};
    EXPECT_TRUE(a.is_subset_of(b));
    EXPECT_TRUE(a.is_proper_subset_of(b));
    EXPECT_FALSE(b.is_subset_of(a));
    EXPECT_EQ(a.intersect(b), a);
    EXPECT_EQ(a.unite(VertexSet{2}), (VertexSet{1, 2, 3, 5}));
    EXPECT_EQ(b.minus(a), VertexSet{2});
    EXPECT_LT(VertexSet{}, a);
}
