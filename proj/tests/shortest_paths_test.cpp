#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "tracking/dag.hpp"
#include "tracking/generate.hpp"
#include "tracking/oracle.hpp"
#include "tracking/shortest_paths.hpp"

using namespace tracking;
using namespace tracking::testing;

TEST(Rule1, PendantVertexDropped) {
    Graph g(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}}, 0, 3);
    auto r = reduce_rule_1(g);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->layered.base.vertex_count(), 4u);
    EXPECT_EQ(r->layered.base.edge_count(), 4u);
    EXPECT_EQ(r->relabeling.table(), (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_EQ(r->stats.rule1_edges_removed, 1u);
    EXPECT_EQ(r->stats.rule1_vertices_removed, 1u);
}

TEST(Rule1, PathUnchanged) {
    auto r = reduce_rule_1(path3());
    ASSERT_TRUE(r);
    EXPECT_EQ(r->layered.base.edges(), path3().edges());
    EXPECT_EQ(r->layered.length, 2u);
    EXPECT_EQ(r->stats.total(), 0u);
}

TEST(Rule1, ChordBetweenEqualLevelsDropped) {
    Graph g(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 2}}, 0, 3);
    auto r = reduce_rule_1(g);
    ASSERT_TRUE(r);
    EXPECT_FALSE(r->layered.base.has_edge(1, 2));
    EXPECT_EQ(r->layered.base.edge_count(), 4u);
}

TEST(Rule1, UnreachableSink) { EXPECT_FALSE(reduce_rule_1(Graph(3, {{0, 1}}, 0, 2))); }

TEST(Enumerate, Diamond) {
    auto r = reduce_rule_1(diamond());
    auto list = enumerate_shortest_paths(r->layered, 10);
    EXPECT_EQ(list.paths, (std::vector<Path>{{0, 1, 3}, {0, 2, 3}}));
}

TEST(Enumerate, PathHasOne) {
    auto list = enumerate_shortest_paths(reduce_rule_1(path3())->layered, 10);
    EXPECT_EQ(list.paths, (std::vector<Path>{{0, 1, 2}}));
}

TEST(Enumerate, ThreeSerialDiamonds) {
    auto r = reduce_rule_1(gen::serial_diamonds(3));
    EXPECT_EQ(enumerate_shortest_paths(r->layered, 100).paths.size(), 8u);
    auto capped = enumerate_shortest_paths(r->layered, 3);
    EXPECT_TRUE(capped.cap_exceeded);
    EXPECT_EQ(capped.paths.size(), 4u);
}

TEST(ToSetSystem, Diamond) {
    auto paths = enumerate_shortest_paths(reduce_rule_1(diamond())->layered, 10).paths;
    auto sys = to_set_system(paths, 4);
    EXPECT_EQ(sys.family(), (std::vector<ElementSet>{{0, 1, 3}, {0, 2, 3}}));
    EXPECT_EQ(sys.size_bound(), 3u);
}

TEST(ToSetSystem, SinglePathNeedsNoTracker) {
    auto sys = to_set_system(std::vector<Path>{{0, 1, 2}}, 3);
    EXPECT_EQ(sys.set_count(), 1u);
    EXPECT_EQ(solve_tracking_set(sys, 0).witness, TrackerSet{});
}

TEST(ToSetSystem, TwoSerialDiamonds) {
    auto paths = enumerate_shortest_paths(reduce_rule_1(gen::serial_diamonds(2))->layered, 10).paths;
    auto sys = to_set_system(paths, 7);
    EXPECT_EQ(sys.set_count(), 4u);
    for (const auto& s : sys.family()) EXPECT_EQ(s.size(), 5u);
}

TEST(ToDag, OrientsByLevel) {
    EXPECT_EQ(to_dag(reduce_rule_1(diamond())->layered).arcs(),
              (std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
    EXPECT_EQ(to_dag(reduce_rule_1(path3())->layered).arcs(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(SolveShortest, DiamondOne) {
    auto r = solve_shortest_paths(diamond(), 1);
    EXPECT_EQ(r.verdict, Verdict::yes);
    EXPECT_EQ(r.witness, TrackerSet({1}));
    EXPECT_TRUE(r.stats.witness_verified);
}

TEST(SolveShortest, DiamondZero) { EXPECT_EQ(solve_shortest_paths(diamond(), 0).verdict, Verdict::no); }

TEST(SolveShortest, PathZero) {
    auto r = solve_shortest_paths(path3(), 0);
    EXPECT_EQ(r.verdict, Verdict::yes);
    EXPECT_EQ(r.witness, TrackerSet{});
}

TEST(SolveShortest, NoPathIsVacuousYes) {
    Graph g(4, {{0, 1}, {2, 3}}, 0, 3);
    for (auto r : {solve_shortest_paths(g, 0), solve_shortest_paths_by_set_system(g, 0)}) {
        EXPECT_EQ(r.verdict, Verdict::yes);
        EXPECT_EQ(r.witness, TrackerSet{});
        EXPECT_TRUE(r.stats.no_path);
    }
}

TEST(SolveShortest, WitnessInOriginalIds) {
    // diamond on ids 5, 2, 7, 0 with a pendant
    Graph g(8, {{5, 2}, {5, 7}, {2, 0}, {7, 0}, {2, 1}}, 5, 0);
    auto r = solve_shortest_paths(g, 1);
    ASSERT_EQ(r.verdict, Verdict::yes);
    ASSERT_EQ(r.witness->size(), 1u);
    EXPECT_TRUE(r.witness->contains(2) || r.witness->contains(7));
}

TEST(SolveShortest, SetSystemRouteCapsEnumeration) {
    auto g = gen::serial_diamonds(4);
    auto no = solve_shortest_paths_by_set_system(g, 3);
    EXPECT_EQ(no.verdict, Verdict::no);
    auto undecided = solve_shortest_paths_by_set_system(g, 5, 4);
    EXPECT_EQ(undecided.verdict, Verdict::undecided);
    auto yes = solve_shortest_paths_by_set_system(g, 4);
    EXPECT_EQ(yes.verdict, Verdict::yes);
    EXPECT_EQ(yes.witness->size(), 4u);
}

TEST(SolveShortest, DiameterTwoLaw) {
    for (std::size_t r = 1; r <= 6; ++r) {
        auto g = gen::diameter_two(r);
        auto yes = solve_shortest_paths(g, r - 1);
        ASSERT_EQ(yes.verdict, Verdict::yes) << "r = " << r;
        EXPECT_EQ(yes.witness->size(), r - 1);
        if (r > 1) {
            EXPECT_EQ(solve_shortest_paths(g, r - 2).verdict, Verdict::no);
        }
    }
}

TEST(ShortestProperty, Rule1KeepsExactlyTheShortestPaths) {
    gen::Rng rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = gen::random_connected_graph(rng, rng.between(2, 12), 0.25);
        auto r = reduce_rule_1(g);
        ASSERT_TRUE(r);
        const auto& lg = r->layered;
        for (const auto& e : lg.base.edges()) {
            EXPECT_EQ(std::max(lg.levels[e.u], lg.levels[e.v]) -
                          std::min(lg.levels[e.u], lg.levels[e.v]),
                      1u);
        }
        auto listed = enumerate_shortest_paths(lg, 1 << 20);
        std::vector<Path> mapped;
        for (const auto& p : listed.paths) mapped.push_back(r->relabeling.map_sequence(p));
        auto expected = shortest_paths(g);
        std::sort(mapped.begin(), mapped.end());
        std::sort(expected.begin(), expected.end());
        EXPECT_EQ(mapped, expected);
        EXPECT_EQ(count_paths(to_dag(lg)).value, expected.size());
    }
}

TEST(ShortestProperty, RoutesAgreeWithOracle) {
    gen::Rng rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = gen::random_connected_graph(rng, rng.between(3, 12), 0.3);
        auto family = shortest_paths(g);
        for (std::size_t k = 0; k <= 4; ++k) {
            auto brute = oracle::brute_min_tracking(family, g.vertex_count(), k);
            auto a = solve_shortest_paths(g, k);
            auto b = solve_shortest_paths_by_set_system(g, k);
            ASSERT_EQ(a.verdict == Verdict::yes, brute.has_value());
            ASSERT_EQ(b.verdict == Verdict::yes, brute.has_value());
            if (brute) {
                EXPECT_EQ(a.witness->size(), *brute);
                EXPECT_EQ(b.witness->size(), *brute);
                EXPECT_TRUE(oracle::tracks(family, a.witness->members()));
                EXPECT_TRUE(oracle::tracks(family, b.witness->members()));
            }
        }
    }
}

TEST(ShortestProperty, LayeredGeneratorHasOnlyShortestPaths) {
    gen::Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = gen::random_layered_graph(rng, rng.between(1, 4), 3, 0.3);
        auto r = reduce_rule_1(g);
        ASSERT_TRUE(r);
        EXPECT_EQ(r->stats.total(), 0u);
    }
}
