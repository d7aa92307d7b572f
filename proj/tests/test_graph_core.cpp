#include <gtest/gtest.h>

#include <random>

#include "llshom/graph.hpp"
#include "llshom/induced.hpp"
#include "llshom/isomorphism.hpp"
#include "llshom/pattern.hpp"
#include "support/oracles.hpp"

using namespace llshom;

TEST(Graph, LoopIsSelfMembership)
{
    Graph g(2);
    EXPECT_TRUE(g.add_edge(0, 0));
    EXPECT_TRUE(g.add_edge(0, 1));
    EXPECT_FALSE(g.add_edge(1, 0));
    EXPECT_TRUE(g.neighbor_set(0).contains(0));
    EXPECT_FALSE(g.neighbor_set(1).contains(1));
    EXPECT_EQ(g.size(), 2u);
    EXPECT_EQ(g.degree(0), 2);
}

TEST(Graph, AdjacencyMatchesEdgeList)
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        Graph g = oracle::random_graph(rng, 9, 0.4);
        for (Vertex u = 0; u < 9; ++u) {
            for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(g.adjacent(u, v), oracle::edge(g, u, v));
            auto nb = g.neighbors(u);
            EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), oracle::neighbourhood(g, u));
        }
    }
}

TEST(Graph, RejectsOutOfRangeVertices)
{
    Graph g(3);
    EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
    EXPECT_THROW(g.add_edge(-1, 0), std::out_of_range);
}

TEST(DirectProduct, SingleEdgesGiveTwoDisjointEdges)
{
    const Graph k2 = graphs::complete(2);
    ProductGraph p = direct_product(k2, k2);
    EXPECT_EQ(p.graph.order(), 4);
    EXPECT_EQ(p.graph.size(), 2u);
    EXPECT_TRUE(p.graph.adjacent(p.index(0, 0), p.index(1, 1)));
    EXPECT_TRUE(p.graph.adjacent(p.index(0, 1), p.index(1, 0)));
}

TEST(DirectProduct, LooplessK1GivesEdgelessGraph)
{
    ProductGraph p = direct_product(graphs::cycle(5), Graph(1));
    EXPECT_EQ(p.graph.order(), 5);
    EXPECT_EQ(p.graph.size(), 0u);
}

TEST(DirectProduct, P3TimesP3MatchesDefinition)
{
    const Graph p3 = graphs::path(3);
    ProductGraph p = direct_product(p3, p3);
    ASSERT_EQ(p.graph.order(), 9);
    std::size_t expected = 0;
    for (Vertex x = 0; x < 9; ++x)
        for (Vertex y = x; y < 9; ++y) {
            const bool e = oracle::product_edge(p3, p3, p.pair(x), p.pair(y));
            expected += e;
            EXPECT_EQ(p.graph.adjacent(x, y), e);
        }
    EXPECT_EQ(p.graph.size(), expected);
    EXPECT_EQ(expected, 8u);
}

TEST(DirectProduct, MembershipMatchesPredicateOnRandomGraphsWithLoops)
{
    std::mt19937_64 rng(11);
    std::bernoulli_distribution coin(0.3);
    for (int round = 0; round < 30; ++round) {
        Graph g = oracle::random_graph(rng, 4, 0.5), h = oracle::random_graph(rng, 3, 0.5);
        for (Vertex v = 0; v < 4; ++v)
            if (coin(rng)) g.add_edge(v, v);
        for (Vertex v = 0; v < 3; ++v)
            if (coin(rng)) h.add_edge(v, v);
        ProductGraph p = direct_product(g, h);
        ASSERT_EQ(p.graph.order(), 12);
        for (Vertex x = 0; x < 12; ++x)
            for (Vertex y = 0; y < 12; ++y)
                EXPECT_EQ(p.graph.adjacent(x, y), oracle::product_edge(g, h, p.pair(x), p.pair(y)));
    }
}

TEST(AssociatedBipartite, TriangleGivesSixCycle)
{
    EXPECT_TRUE(isomorphic(associated_bipartite(graphs::complete(3)).graph, graphs::cycle(6)));
}

TEST(AssociatedBipartite, EdgeWithTwoLoopsGivesFourCycle)
{
    EXPECT_TRUE(isomorphic(associated_bipartite(graphs::edge_two_loops()).graph, graphs::cycle(4)));
}

TEST(AssociatedBipartite, EdgeWithOneLoopGivesFourPath)
{
    EXPECT_TRUE(isomorphic(associated_bipartite(graphs::edge_one_loop()).graph, graphs::path(4)));
}

TEST(AssociatedBipartite, AlwaysLooplessAndBipartiteAcrossPrimes)
{
    std::mt19937_64 rng(3);
    std::bernoulli_distribution coin(0.4);
    for (int round = 0; round < 40; ++round) {
        Graph h = oracle::random_graph(rng, 5, 0.5);
        for (Vertex v = 0; v < 5; ++v)
            if (coin(rng)) h.add_edge(v, v);
        AssociatedBipartite s = associated_bipartite(h);
        EXPECT_FALSE(s.graph.has_loops());
        for (const Edge& e : s.graph.edges()) {
            EXPECT_NE(s.is_prime(e.u), s.is_prime(e.v));
            EXPECT_TRUE(h.adjacent(s.base(e.u), s.base(e.v)));
        }
        for (Vertex a = 0; a < 5; ++a)
            for (Vertex b = 0; b < 5; ++b)
                EXPECT_EQ(s.graph.adjacent(s.prime(a), s.double_prime(b)), h.adjacent(a, b));
    }
}

TEST(Bipartition, EvenCycle)
{
    auto bp = bipartition(graphs::cycle(4));
    ASSERT_TRUE(bp);
    EXPECT_EQ(bp->class_a, (std::vector<Vertex>{0, 2}));
    EXPECT_EQ(bp->class_b, (std::vector<Vertex>{1, 3}));
}

TEST(Bipartition, OddCycleAndLoopHaveNone)
{
    EXPECT_FALSE(bipartition(graphs::cycle(5)));
    Graph g = graphs::path(4);
    g.add_edge(2, 2);
    EXPECT_FALSE(bipartition(g));
}

TEST(Bipartition, AgreesWithTwoColouringOracle)
{
    std::mt19937_64 rng(5);
    for (int round = 0; round < 300; ++round) {
        Graph g = oracle::random_graph(rng, 8, 0.25);
        EXPECT_EQ(is_bipartite(g), !oracle::has_odd_cycle(g));
        if (auto bp = bipartition(g)) {
            for (const Edge& e : g.edges()) EXPECT_NE(bp->in_a(e.u), bp->in_a(e.v));
        }
    }
}

TEST(FindInduced, PathInPathIsConsecutive)
{
    auto e = find_induced(graphs::path(5), PatternGraph::path(3));
    ASSERT_TRUE(e);
    EXPECT_EQ(*e, (std::vector<Vertex>{0, 1, 2}));
}

TEST(FindInduced, FourCycleHasNoInducedFourPath)
{
    EXPECT_FALSE(find_induced(graphs::cycle(4), PatternGraph::path(4)));
}

TEST(FindInduced, ClawAgreesWithSubsetEnumeration)
{
    std::mt19937_64 rng(13);
    const Graph claw = PatternGraph::claw(1, 1, 1).to_graph();
    int found = 0;
    for (int round = 0; round < 60; ++round) {
        Graph g = oracle::random_graph(rng, 10, 0.15 + 0.01 * round);
        auto e = find_induced(g, claw);
        EXPECT_EQ(e.has_value(), oracle::contains_induced(g, claw));
        if (e) {
            ++found;
            EXPECT_TRUE(isomorphic(induced_subgraph(g, *e), claw));
        }
    }
    EXPECT_GT(found, 0);
}

TEST(FindInduced, RandomPatternsAgreeWithOracle)
{
    std::mt19937_64 rng(17);
    const PatternGraph patterns[] = {PatternGraph::path(4), PatternGraph::path(5), PatternGraph::claw(1, 1, 2),
                                     PatternGraph({PatternComponent::path(2), PatternComponent::path(2)})};
    for (int round = 0; round < 40; ++round) {
        Graph g = oracle::random_graph(rng, 9, 0.3);
        for (const PatternGraph& f : patterns) {
            auto e = find_induced(g, f);
            EXPECT_EQ(e.has_value(), oracle::contains_induced(g, f.to_graph())) << f.to_string();
        }
    }
}

TEST(FindInduced, ReturnsLexicographicallyLeastEmbedding)
{
    Graph g = graphs::cycle(6);
    auto e = find_induced(g, graphs::path(3));
    ASSERT_TRUE(e);
    EXPECT_EQ(*e, (std::vector<Vertex>{0, 1, 2}));
}

TEST(Girth, KnownValues)
{
    EXPECT_EQ(girth(graphs::cycle(6)), 6);
    EXPECT_EQ(girth(graphs::path(7)), infinite_girth);
    EXPECT_EQ(girth(graphs::star(4)), infinite_girth);
    EXPECT_EQ(girth(graphs::complete(4)), 3);
    EXPECT_EQ(girth(graphs::looped_vertex()), 1);
}

TEST(Girth, AgreesWithCycleEnumeration)
{
    std::mt19937_64 rng(19);
    for (int round = 0; round < 100; ++round) {
        Graph g = oracle::random_graph(rng, 8, 0.25);
        const int want = oracle::girth(g);
        EXPECT_EQ(girth(g), want == 0 ? infinite_girth : want);
        for (int p = 1; p <= 9; ++p) EXPECT_EQ(girth_at_least(g, p), want == 0 || want >= p);
    }
}

TEST(MaxDegree, StarAndEmpty)
{
    EXPECT_EQ(max_degree(graphs::star(5)), 5);
    EXPECT_EQ(max_degree(Graph(3)), 0);
}

TEST(Pattern, ParsesForestsAndOrdersComponents)
{
    PatternGraph f = parse_pattern("P3+S(1,2,3)");
    EXPECT_EQ(f.kind(), PatternGraph::Kind::forest);
    EXPECT_EQ(f.order(), 10);
    auto sorted = f.by_size_descending();
    EXPECT_EQ(sorted.front().kind, PatternComponent::Kind::claw);
    EXPECT_THROW(parse_pattern("Q3"), std::invalid_argument);
}
