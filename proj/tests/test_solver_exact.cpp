#include <gtest/gtest.h>

#include <random>

#include "llshom/solve.hpp"
#include "llshom/solver_exact.hpp"
#include "llshom/verifier.hpp"
#include "support/oracles.hpp"

using namespace llshom;

namespace {

Instance random_instance(std::mt19937_64& rng, const Graph& h, int n, double density, double keep)
{
    Instance inst{h, oracle::random_graph(rng, n, density), {}};
    std::bernoulli_distribution coin(keep);
    for (Vertex v = 0; v < n; ++v) {
        VertexSet l;
        for (Vertex a = 0; a < h.order(); ++a)
            if (coin(rng)) l.insert(a);
        inst.lists.push_back(l);
    }
    return inst;
}

Graph random_target(std::mt19937_64& rng, int k)
{
    Graph h = oracle::random_graph(rng, k, 0.5);
    std::bernoulli_distribution coin(0.3);
    for (Vertex a = 0; a < k; ++a)
        if (coin(rng)) h.add_edge(a, a);
    return h;
}

void expect_matches_oracle(const Instance& inst, const SolveResult& r)
{
    auto want = oracle::solve(inst);
    ASSERT_NE(r.status, Status::budget_exceeded);
    EXPECT_EQ(r.status == Status::yes, want.has_value());
    if (r.status == Status::yes) { EXPECT_TRUE(oracle::is_lls(inst, r.witness)); }
}

} // namespace

TEST(BruteForce, LooplessK1CannotHostAnEdge)
{
    EXPECT_EQ(solve_bruteforce(Instance::full_lists(Graph(1), graphs::complete(2))).status, Status::no);
}

TEST(BruteForce, AlternatingFourCycleIntoP3)
{
    Instance inst{graphs::path(3), graphs::cycle(4), {VertexSet{0, 2}, VertexSet{1}, VertexSet{0, 2}, VertexSet{1}}};
    SolveResult r = solve_bruteforce(inst);
    ASSERT_EQ(r.status, Status::yes);
    EXPECT_EQ(r.witness, (Homomorphism{0, 1, 2, 1}));
}

TEST(BruteForce, EmptyListMeansNo)
{
    std::mt19937_64 rng(41);
    for (int round = 0; round < 50; ++round) {
        Instance inst = random_instance(rng, graphs::path(3), 6, 0.4, 1.0);
        inst.lists[rng() % 6] = VertexSet{};
        EXPECT_EQ(solve_bruteforce(inst).status, Status::no);
    }
}

TEST(BruteForce, BudgetExhaustionIsReported)
{
    Instance inst = Instance::full_lists(graphs::complete(4), graphs::cycle(12));
    SolveResult r = solve_bruteforce(inst, 5);
    EXPECT_EQ(r.status, Status::budget_exceeded);
    EXPECT_LE(r.stats.nodes, 5u);
}

TEST(BruteForce, AgreesWithOracleOnRandomTargets)
{
    std::mt19937_64 rng(43);
    for (int round = 0; round < 600; ++round) {
        const int k = 1 + static_cast<int>(rng() % 4), n = 1 + static_cast<int>(rng() % 6);
        Instance inst = random_instance(rng, random_target(rng, k), n, 0.4, 0.7);
        expect_matches_oracle(inst, solve_bruteforce(inst));
    }
}

TEST(BruteForce, PruningRuleKeepsAnswers)
{
    // Removing a value that some neighbour's whole list cannot accompany
    // never changes the answer.
    std::mt19937_64 rng(47);
    for (int round = 0; round < 400; ++round) {
        const int k = 2 + static_cast<int>(rng() % 3), n = 2 + static_cast<int>(rng() % 5);
        Instance inst = random_instance(rng, random_target(rng, k), n, 0.5, 0.7);
        Instance pruned = inst;
        for (const Edge& e : inst.source.edges())
            for (auto [v, w] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}})
                inst.lists[v].for_each([&](Vertex a) {
                    bool any = false;
                    inst.lists[w].for_each([&](Vertex b) { any = any || inst.target.adjacent(a, b); });
                    if (!any) pruned.lists[v].erase(a);
                });
        EXPECT_EQ(solve_bruteforce(inst).status, solve_bruteforce(pruned).status);
    }
}

TEST(SolvePoly, LoopedK1)
{
    SolveResult r = solve_poly(Instance::full_lists(graphs::looped_vertex(), graphs::complete(2)));
    ASSERT_EQ(r.status, Status::yes);
    EXPECT_EQ(r.witness, (Homomorphism{0, 0}));
}

TEST(SolvePoly, K2OnPath)
{
    Instance inst = Instance::full_lists(graphs::complete(2), graphs::path(3));
    SolveResult r = solve_poly(inst);
    ASSERT_EQ(r.status, Status::yes);
    EXPECT_EQ(r.witness[0], r.witness[2]);
    EXPECT_NE(r.witness[0], r.witness[1]);
}

TEST(SolvePoly, K2WithListsForcingOneSide)
{
    Instance inst{graphs::complete(2), graphs::path(4), {VertexSet{0}, VertexSet{0, 1}, VertexSet{0, 1}, VertexSet{0}}};
    EXPECT_EQ(solve_poly(inst).status, Status::no);
    EXPECT_EQ(solve_bruteforce(inst).status, Status::no);
}

TEST(SolvePoly, OtherTargetsAreNotApplicable)
{
    EXPECT_EQ(solve_poly(Instance::full_lists(graphs::path(3), graphs::path(2))).status, Status::not_applicable);
    EXPECT_EQ(solve_poly(Instance::full_lists(graphs::edge_one_loop(), graphs::path(2))).status, Status::not_applicable);
}

TEST(SolvePoly, AgreesWithOracle)
{
    std::mt19937_64 rng(53);
    for (const Graph& h : {Graph(1), graphs::looped_vertex(), graphs::complete(2)})
        for (int round = 0; round < 300; ++round) {
            Instance inst = random_instance(rng, h, 1 + static_cast<int>(rng() % 8), 0.3, 0.8);
            expect_matches_oracle(inst, solve_poly(inst));
        }
}

TEST(SolveAuto, RoutesP3AndAgrees)
{
    std::mt19937_64 rng(59);
    for (int round = 0; round < 200; ++round) {
        Instance inst = random_instance(rng, graphs::path(3), 1 + static_cast<int>(rng() % 9), 0.35, 0.8);
        expect_matches_oracle(inst, solve_auto(inst));
    }
}

TEST(SolveAuto, K2GoesToPolynomialCase)
{
    Instance inst = Instance::full_lists(graphs::complete(2), graphs::cycle(6));
    SolveResult r = solve_auto(inst);
    ASSERT_EQ(r.status, Status::yes);
    EXPECT_EQ(r.stats.nodes, 0u);
    EXPECT_TRUE(verify_solution(inst, r.witness).accepted);
}

TEST(SolveAuto, SixCycleTargetLiftsToTriangle)
{
    std::mt19937_64 rng(61);
    for (int round = 0; round < 300; ++round) {
        Instance inst = random_instance(rng, graphs::cycle(6), 1 + static_cast<int>(rng() % 8), 0.4, 0.7);
        expect_matches_oracle(inst, solve_auto(inst));
    }
}

TEST(SolveAuto, AgreesWithBruteForceOnSmallTargets)
{
    std::mt19937_64 rng(67);
    for (int round = 0; round < 400; ++round) {
        const int k = 1 + static_cast<int>(rng() % 5), n = 1 + static_cast<int>(rng() % 7);
        Graph h = random_target(rng, k);
        Instance inst = random_instance(rng, h, n, 0.4, 0.7);
        SolveResult a = solve_auto(inst), b = solve_bruteforce(inst);
        EXPECT_EQ(a.status, b.status);
        if (a.status == Status::yes) { EXPECT_TRUE(verify_solution(inst, a.witness).accepted); }
    }
}

TEST(SolveAuto, DisconnectedTargetTriesEveryComponent)
{
    Graph h = graphs::disjoint_union(graphs::complete(2), graphs::path(3));
    Instance inst = Instance::full_lists(h, graphs::disjoint_union(graphs::complete(2), graphs::cycle(4)));
    SolveResult r = solve_auto(inst);
    ASSERT_EQ(r.status, Status::yes);
    EXPECT_TRUE(verify_solution(inst, r.witness).accepted);
}
