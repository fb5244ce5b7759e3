#include <algorithm>

#include <gtest/gtest.h>

#include "chordal/oracle.hpp"
#include "chordal/search.hpp"
#include "support/fixtures.hpp"

using namespace chordal;

namespace {

VertexOrdering reversed(const VertexOrdering& o) { return {o.rbegin(), o.rend()}; }

// Certificate self-check: the hole must be a chordless cycle, length >= 4.
void expect_valid_hole(const Graph& g, const std::vector<int>& hole) {
    ASSERT_GE(hole.size(), 4u);
    for (size_t i = 0; i < hole.size(); ++i)
        for (size_t j = i + 1; j < hole.size(); ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == hole.size() - 1);
            EXPECT_EQ(g.has_edge(hole[i], hole[j]), consecutive)
                << "pair " << hole[i] << "," << hole[j];
        }
}

}  // namespace

TEST(LexBfs, CompleteGraphVisitsInIdOrder) {
    EXPECT_EQ(lexbfs(fixtures::complete(3), 0), (VertexOrdering{0, 1, 2}));
    EXPECT_EQ(lexbfs(fixtures::complete(5), 2), (VertexOrdering{2, 0, 1, 3, 4}));
}

TEST(LexBfs, P4FromEndIsPerfectElimination) {
    Graph p4 = fixtures::path(4);
    VertexOrdering o = lexbfs(p4, 0);
    EXPECT_EQ(o, (VertexOrdering{0, 1, 2, 3}));
    EXPECT_TRUE(is_simplicial_elimination_scheme(p4, reversed(o)).ok);
}

TEST(LexBfs, RejectsDisconnected) {
    Graph g(4, {{0, 1}, {2, 3}});
    EXPECT_THROW(lexbfs(g, 0), PreconditionError);
    EXPECT_THROW(mcs(g, 0), PreconditionError);
}

TEST(Mcs, CompleteAndStar) {
    EXPECT_EQ(mcs(fixtures::complete(3), 0), (VertexOrdering{0, 1, 2}));
    // star centered at 0: all leaves tie at weight 1 after the center
    EXPECT_EQ(mcs(fixtures::star(3), 0), (VertexOrdering{0, 1, 2, 3}));
}

TEST(Mcs, TieBreakIsSmallestId) {
    // After visiting 3, vertices 2 and 4 tie; 2 must come first.
    Graph g(5, {{3, 2}, {3, 4}, {2, 1}, {4, 0}});
    VertexOrdering o = mcs(g, 3);
    EXPECT_EQ(o[0], 3);
    EXPECT_EQ(o[1], 2);
}

TEST(SchemeCheck, CompleteGraphAnyOrdering) {
    Graph k4 = fixtures::complete(4);
    EXPECT_TRUE(is_simplicial_elimination_scheme(k4, {2, 0, 3, 1}).ok);
}

TEST(SchemeCheck, C4AllOrderingsFail) {
    Graph c4 = fixtures::cycle(4);
    VertexOrdering ord{0, 1, 2, 3};
    std::sort(ord.begin(), ord.end());
    int checked = 0;
    do {
        EXPECT_FALSE(is_simplicial_elimination_scheme(c4, ord).ok);
        ++checked;
    } while (std::next_permutation(ord.begin(), ord.end()));
    EXPECT_EQ(checked, 24);
}

TEST(SchemeCheck, P4SpecificOrdering) {
    Graph p4 = fixtures::path(4);
    EXPECT_TRUE(is_simplicial_elimination_scheme(p4, {0, 3, 1, 2}).ok);
}

TEST(SchemeCheck, WitnessIsFirstViolation) {
    Graph c4 = fixtures::cycle(4);
    SchemeCheck chk = is_simplicial_elimination_scheme(c4, {0, 1, 2, 3});
    EXPECT_FALSE(chk.ok);
    EXPECT_EQ(chk.position, 0);  // vertex 0 has non-adjacent later neighbors 1,3
    EXPECT_EQ(chk.witness_u, 1);
    EXPECT_EQ(chk.witness_v, 3);
}

TEST(SchemeCheck, RejectsNonPermutation) {
    Graph p3 = fixtures::path(3);
    EXPECT_THROW(is_simplicial_elimination_scheme(p3, {0, 1}), PreconditionError);
    EXPECT_THROW(is_simplicial_elimination_scheme(p3, {0, 1, 1}), PreconditionError);
}

TEST(IsChordal, C4YieldsItselfAsHole) {
    ChordalityCertificate c = is_chordal(fixtures::cycle(4));
    EXPECT_FALSE(c.chordal);
    EXPECT_EQ(c.hole, (std::vector<int>{0, 1, 2, 3}));
}

TEST(IsChordal, SunIsChordal) {
    ChordalityCertificate c = is_chordal(fixtures::sun3());
    EXPECT_TRUE(c.chordal);
    EXPECT_TRUE(is_simplicial_elimination_scheme(fixtures::sun3(), c.scheme).ok);
}

TEST(IsChordal, C5WithOneChordHasHoleOfLength4) {
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
    ChordalityCertificate c = is_chordal(g);
    EXPECT_FALSE(c.chordal);
    EXPECT_EQ(c.hole.size(), 4u);
    expect_valid_hole(g, c.hole);
}

TEST(SimplicialVertices, Examples) {
    EXPECT_EQ(simplicial_vertices(fixtures::path(4)), (VertexSet{0, 3}));
    EXPECT_EQ(simplicial_vertices(fixtures::complete(5)), (VertexSet{0, 1, 2, 3, 4}));
    EXPECT_EQ(simplicial_vertices(fixtures::sun3()), (VertexSet{3, 4, 5}));
}

// Over every connected chordal graph with n <= 6 and every start vertex,
// reversed LexBFS and reversed MCS orders are simplicial elimination
// schemes; over non-chordal graphs is_chordal returns a verified hole.
TEST(SearchProperties, ExhaustiveSmallGraphs) {
    auto spec = oracle::CorpusSpec::exhaustive_up_to(6);
    long chordal_count = 0, hole_count = 0;
    oracle::enumerate_graphs(spec, [&](const Graph& g) {
        bool truth = oracle::chordal(g);
        ChordalityCertificate c = is_chordal(g);
        EXPECT_EQ(c.chordal, truth);
        if (truth) {
            ++chordal_count;
            EXPECT_TRUE(is_simplicial_elimination_scheme(g, c.scheme).ok);
            for (int s = 0; s < g.vertex_count(); ++s) {
                VertexOrdering lb = lexbfs(g, s);
                EXPECT_TRUE(is_simplicial_elimination_scheme(g, reversed(lb)).ok)
                    << "lexbfs from " << s;
                EXPECT_TRUE(is_simplicial_elimination_scheme(g, reversed(mcs(g, s))).ok)
                    << "mcs from " << s;
                // last visited vertex of a LexBFS on a chordal graph is simplicial
                EXPECT_TRUE(simplicial_vertices(g).contains(lb.back()));
            }
        } else {
            ++hole_count;
            expect_valid_hole(g, c.hole);
        }
        return true;
    });
    EXPECT_GT(chordal_count, 0);
    EXPECT_GT(hole_count, 0);
}

// LexBFS+ visits within ties by latest position in the previous sweep.
TEST(LexBfsPlus, UsesPreviousOrderForTies) {
    Graph p4 = fixtures::path(4);
    VertexOrdering s1 = lexbfs(p4, 0);           // 0 1 2 3
    VertexOrdering s2 = lexbfs_plus(p4, s1);     // starts at 3
    EXPECT_EQ(s2.front(), 3);
    EXPECT_EQ(s2, (VertexOrdering{3, 2, 1, 0}));
}

TEST(SearchProperties, RandomChordalSchemes) {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = generate_random_chordal(60, 0.2, seed);
        EXPECT_TRUE(is_simplicial_elimination_scheme(g, reversed(lexbfs(g, 0))).ok);
        EXPECT_TRUE(is_simplicial_elimination_scheme(g, reversed(mcs(g, 0))).ok);
    }
}
