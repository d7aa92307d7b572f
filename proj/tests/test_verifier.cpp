#include <gtest/gtest.h>

#include <random>

#include "llshom/verifier.hpp"
#include "support/oracles.hpp"

using namespace llshom;

TEST(IsListHomomorphism, IdentityOnEdge)
{
    Instance inst = Instance::full_lists(graphs::complete(2), graphs::complete(2));
    EXPECT_TRUE(is_list_homomorphism(inst, {0, 1}).ok);
}

TEST(IsListHomomorphism, CollapsedEdgeReportsTheEdge)
{
    Instance inst = Instance::full_lists(graphs::complete(2), graphs::complete(2));
    auto r = is_list_homomorphism(inst, {0, 0});
    EXPECT_FALSE(r.ok);
    ASSERT_TRUE(r.bad_edge);
    EXPECT_EQ(*r.bad_edge, (Edge{0, 1}));
}

TEST(IsListHomomorphism, ListViolationAndPartialMaps)
{
    Instance inst{graphs::complete(2), graphs::complete(2), {VertexSet{0}, VertexSet{0}}};
    auto r = is_list_homomorphism(inst, {0, 1});
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.bad_list_vertex, 1);
    EXPECT_FALSE(is_list_homomorphism(inst, {0}).ok);
    EXPECT_FALSE(is_list_homomorphism(inst, {0, 7}).ok);
}

TEST(IsListHomomorphism, AgreesWithDefinitionOnRandomMaps)
{
    std::mt19937_64 rng(37);
    std::bernoulli_distribution coin(0.7);
    for (int round = 0; round < 2000; ++round) {
        const int n = 1 + static_cast<int>(rng() % 8), k = 1 + static_cast<int>(rng() % 4);
        Graph h = oracle::random_graph(rng, k, 0.6);
        for (Vertex a = 0; a < k; ++a)
            if (!coin(rng)) h.add_edge(a, a);
        Instance inst{h, oracle::random_graph(rng, n, 0.3), {}};
        Homomorphism map;
        for (Vertex v = 0; v < n; ++v) {
            VertexSet l;
            for (Vertex a = 0; a < k; ++a)
                if (coin(rng)) l.insert(a);
            inst.lists.push_back(l);
            map.push_back(static_cast<Vertex>(rng() % static_cast<unsigned>(k)));
        }
        EXPECT_EQ(is_list_homomorphism(inst, map).ok, oracle::is_hom(inst, map));
        EXPECT_EQ(verify_solution(inst, map).accepted, oracle::is_lls(inst, map));
        if (oracle::is_hom(inst, map)) {
            const auto happy = happy_vertices(inst, map);
            for (Vertex v = 0; v < n; ++v)
                EXPECT_EQ(std::binary_search(happy.begin(), happy.end(), v), oracle::happy(inst, map, v));
        }
    }
}

TEST(HappyVertices, BijectionOntoEdge)
{
    Instance inst = Instance::full_lists(graphs::complete(2), graphs::complete(2));
    EXPECT_EQ(happy_vertices(inst, {0, 1}), (std::vector<Vertex>{0, 1}));
}

TEST(HappyVertices, EdgeIntoP3)
{
    // Labels 0,1,2 for the path 1-2-3: the end is happy, the middle misses 2.
    Instance inst = Instance::full_lists(graphs::path(3), graphs::complete(2));
    EXPECT_EQ(happy_vertices(inst, {0, 1}), (std::vector<Vertex>{0}));
    EXPECT_EQ(missing_neighbors(inst, {0, 1}, 1), VertexSet{2});
}

TEST(HappyVertices, AlternatingFourCycleIntoP3)
{
    Instance inst{graphs::path(3), graphs::cycle(4), {VertexSet{0, 2}, VertexSet{1}, VertexSet{0, 2}, VertexSet{1}}};
    const Homomorphism h{0, 1, 2, 1};
    EXPECT_EQ(happy_vertices(inst, h), (std::vector<Vertex>{0, 1, 2, 3}));
    for (Vertex v = 0; v < 4; ++v) EXPECT_TRUE(oracle::happy(inst, h, v));
}

TEST(HappyVertices, LoopCountsAsOwnNeighbour)
{
    // K1 with a loop: a vertex is happy iff it has a neighbour.
    Instance inst = Instance::full_lists(graphs::looped_vertex(), graphs::path(2));
    inst.source.add_vertex();
    inst.lists.push_back(VertexSet{0});
    EXPECT_EQ(happy_vertices(inst, {0, 0, 0}), (std::vector<Vertex>{0, 1}));
}

TEST(VerifySolution, NamesFirstUnhappyVertexAndMissingNeighbour)
{
    Instance inst = Instance::full_lists(graphs::path(3), graphs::path(3));
    Verdict v = verify_solution(inst, {0, 1, 0});
    EXPECT_FALSE(v.accepted);
    EXPECT_EQ(v.unhappy_vertex, 1);
    EXPECT_EQ(v.missing_neighbor, 2);
    EXPECT_FALSE(v.diagnostic.empty());
    EXPECT_TRUE(verify_solution(inst, {0, 1, 2}).accepted);
}
