#include <gtest/gtest.h>

#include <random>

#include "llshom/instance.hpp"
#include "llshom/isomorphism.hpp"
#include "support/oracles.hpp"

using namespace llshom;

namespace {

bool yes(const Instance& inst) { return oracle::solve(inst).has_value(); }

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

} // namespace

TEST(Instance, ValidateRejectsBadLists)
{
    Instance inst{graphs::path(3), Graph(2), {VertexSet{0}}};
    EXPECT_THROW(inst.validate(), std::invalid_argument);
    inst.lists.push_back(VertexSet{5});
    EXPECT_THROW(inst.validate(), std::invalid_argument);
    inst.lists.back() = VertexSet{2};
    EXPECT_NO_THROW(inst.validate());
}

TEST(SplitConsistent, SingleEdgeOverP3GivesBothOrientations)
{
    Instance inst = Instance::full_lists(graphs::path(3), graphs::path(2));
    auto split = split_consistent(inst);
    ASSERT_TRUE(split);
    ASSERT_EQ(split->size(), 1u);
    const auto& opts = split->front().options;
    ASSERT_EQ(opts.size(), 2u);
    // Target classes: {0,2} holds vertex 0, so it is X.
    EXPECT_EQ(opts[0].instance.lists, (ListAssignment{VertexSet{0, 2}, VertexSet{1}}));
    EXPECT_EQ(opts[1].instance.lists, (ListAssignment{VertexSet{1}, VertexSet{0, 2}}));
}

TEST(SplitConsistent, OddCycleHasNoSplit)
{
    EXPECT_FALSE(split_consistent(Instance::full_lists(graphs::path(3), graphs::cycle(5))));
}

TEST(SplitConsistent, AnswerIsDisjunctionPerComponent)
{
    std::mt19937_64 rng(23);
    for (const Graph& h : {graphs::cycle(4), graphs::path(3), graphs::path(4)}) {
        for (int round = 0; round < 150; ++round) {
            const int n = 1 + static_cast<int>(rng() % 7);
            Instance inst = random_instance(rng, h, n, 0.45, 0.8);
            auto split = split_consistent(inst);
            if (!split) {
                EXPECT_FALSE(yes(inst));
                continue;
            }
            bool all = true;
            for (const ComponentSplit& s : *split) {
                bool any = false;
                for (const ConsistentInstance& ci : s.options) any = any || yes(ci.instance);
                all = all && any;
            }
            EXPECT_EQ(all, yes(inst)) << "round " << round;
        }
    }
}

TEST(LiftToBase, ListTranslation)
{
    const Graph k3 = graphs::complete(3);
    const AssociatedBipartite star = associated_bipartite(k3);
    Instance inst{star.graph, graphs::path(2), {VertexSet{star.prime(1)}, VertexSet{}}};
    LiftedInstance lifted = lift_to_base(inst, k3, std::vector<std::uint8_t>{1, 0});
    EXPECT_EQ(lifted.instance.lists[0], VertexSet{1});
    EXPECT_TRUE(lifted.instance.lists[1].empty());
    EXPECT_EQ(lifted.instance.target, k3);
}

TEST(LiftToBase, RejectsWrongTarget)
{
    Instance inst = Instance::full_lists(graphs::cycle(5), Graph(1));
    EXPECT_THROW(lift_to_base(inst, graphs::complete(3)), std::invalid_argument);
}

TEST(LiftToBase, TriangleAnswersMatch)
{
    std::mt19937_64 rng(29);
    const Graph k3 = graphs::complete(3);
    const AssociatedBipartite star = associated_bipartite(k3);
    int yes_count = 0;
    for (int round = 0; round < 400; ++round) {
        // Every fourth round is a six-cycle with full lists, which is yes.
        const bool planted = round % 4 == 0;
        const int n = planted ? 6 : 1 + static_cast<int>(rng() % 6);
        Graph g = planted ? graphs::cycle(6) : oracle::random_graph(rng, n, 0.5);
        auto bp = bipartition(g);
        if (!bp) continue;
        Instance inst{star.graph, g, {}};
        std::vector<std::uint8_t> primed(static_cast<std::size_t>(n));
        std::bernoulli_distribution coin(planted ? 1.0 : 0.75);
        for (Vertex v = 0; v < n; ++v) {
            primed[v] = bp->in_a(v);
            VertexSet l;
            for (Vertex a = 0; a < 3; ++a)
                if (coin(rng)) l.insert(primed[v] ? star.prime(a) : star.double_prime(a));
            inst.lists.push_back(l);
        }
        LiftedInstance lifted = lift_to_base(inst, k3, primed);
        auto direct = oracle::solve(inst);
        auto base = oracle::solve(lifted.instance);
        EXPECT_EQ(direct.has_value(), base.has_value());
        if (base) {
            ++yes_count;
            EXPECT_TRUE(oracle::is_lls(inst, lower_witness(lifted, *base)));
        }
    }
    EXPECT_GT(yes_count, 0);
}

TEST(ReduceC4, DisplayedListsOnSingleEdge)
{
    // C4 = 0-1-2-3-0 with X classes {0,2}.
    Instance inst{graphs::cycle(4), graphs::path(2), {VertexSet{0, 2}, VertexSet{1, 3}}};
    C4Reduction r = reduce_c4_to_p3(inst);
    // First instance is over C4[0,1,2]: Y pinned to 1.
    EXPECT_EQ(r.first.lists[0], (VertexSet{0, 2}));
    EXPECT_EQ(r.first.lists[1], VertexSet{1});
    // Second is over C4[3,0,1] relabelled to 0,1,2: X pinned to the middle.
    EXPECT_EQ(r.second.lists[0], VertexSet{1});
    EXPECT_EQ(r.second.lists[1], (VertexSet{0, 2}));
}

TEST(ReduceC4, PinnedYKeepsConjunctionSemantics)
{
    Instance inst{graphs::cycle(4), graphs::cycle(4), {VertexSet{0, 2}, VertexSet{1}, VertexSet{0, 2}, VertexSet{1}}};
    C4Reduction r = reduce_c4_to_p3(inst);
    EXPECT_EQ(r.first.lists, (ListAssignment{VertexSet{0, 2}, VertexSet{1}, VertexSet{0, 2}, VertexSet{1}}));
    EXPECT_EQ(yes(r.first) && yes(r.second), yes(inst));
}

TEST(ReduceC4, CompleteBipartiteFullLists)
{
    Graph k22 = graphs::cycle(4);
    Instance inst{graphs::cycle(4), k22, {VertexSet{0, 2}, VertexSet{1, 3}, VertexSet{0, 2}, VertexSet{1, 3}}};
    C4Reduction r = reduce_c4_to_p3(inst);
    ASSERT_TRUE(yes(inst));
    ASSERT_TRUE(yes(r.first) && yes(r.second));
    auto a = oracle::solve(r.first), b = oracle::solve(r.second);
    EXPECT_TRUE(oracle::is_lls(inst, combine_c4_witness(r, *a, *b)));
}

TEST(ReduceC4, ConjunctionEqualsAnswerOnRandomConsistentInstances)
{
    std::mt19937_64 rng(31);
    std::bernoulli_distribution coin(0.8);
    int checked = 0;
    for (int round = 0; round < 600; ++round) {
        const int n = 1 + static_cast<int>(rng() % 8);
        Graph g = oracle::random_graph(rng, n, 0.4);
        auto bp = bipartition(g);
        if (!bp) continue;
        Instance inst{graphs::cycle(4), g, {}};
        for (Vertex v = 0; v < n; ++v) {
            VertexSet l;
            for (Vertex a : bp->in_a(v) ? std::vector<Vertex>{0, 2} : std::vector<Vertex>{1, 3})
                if (coin(rng)) l.insert(a);
            inst.lists.push_back(l);
        }
        C4Reduction r = reduce_c4_to_p3(inst);
        EXPECT_EQ(yes(r.first) && yes(r.second), yes(inst));
        ++checked;
    }
    EXPECT_GT(checked, 100);
}

TEST(ReduceC4, RejectsInconsistentLists)
{
    Instance inst{graphs::cycle(4), graphs::path(2), {VertexSet{1}, VertexSet{1, 3}}};
    EXPECT_THROW(reduce_c4_to_p3(inst), std::invalid_argument);
}

TEST(Isomorphism, FindsBaseForBipartiteTargets)
{
    auto base = find_associated_base(graphs::cycle(6));
    ASSERT_TRUE(base);
    EXPECT_TRUE(isomorphic(associated_bipartite(base->base).graph, graphs::cycle(6)));
    EXPECT_FALSE(find_associated_base(graphs::path(3)));
}
