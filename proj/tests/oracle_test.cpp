#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"
#include "tracking/generate.hpp"
#include "tracking/oracle.hpp"

using namespace tracking;
using namespace tracking::testing;

TEST(Oracle, DiamondHasTwoPaths) {
    auto e = oracle::enumerate_all_paths(diamond_dag(), 100);
    EXPECT_FALSE(e.cap_exceeded);
    EXPECT_EQ(e.paths, (std::vector<Path>{{0, 1, 3}, {0, 2, 3}}));
}

TEST(Oracle, SingleArcHasOnePath) {
    auto e = oracle::enumerate_all_paths(Digraph(2, {{0, 1}}, 0, 1), 100);
    EXPECT_EQ(e.paths, (std::vector<Path>{{0, 1}}));
}

TEST(Oracle, ThreeSerialDiamondsHaveEightPaths) {
    auto e = oracle::enumerate_all_paths(gen::serial_diamonds_dag(3), 100);
    EXPECT_EQ(e.paths.size(), 8u);
    for (const auto& p : e.paths) EXPECT_EQ(p.size(), 7u);
}

TEST(Oracle, CapStopsEnumeration) {
    auto e = oracle::enumerate_all_paths(gen::serial_diamonds_dag(3), 5);
    EXPECT_TRUE(e.cap_exceeded);
    EXPECT_EQ(e.paths.size(), 6u);
}

TEST(Oracle, UnreachableSinkHasNoPaths) {
    auto e = oracle::enumerate_all_paths(Digraph(3, {{0, 1}}, 0, 2), 10);
    EXPECT_TRUE(e.paths.empty());
    EXPECT_TRUE(oracle::enumerate_shortest_paths(Graph(3, {{0, 1}}, 0, 2), 10).paths.empty());
}

TEST(Oracle, ShortestPathsSkipLongerDetours) {
    // diamond plus a long way round s-4-5-t
    Graph g(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 5}, {5, 3}}, 0, 3);
    auto shortest = oracle::enumerate_shortest_paths(g, 100).paths;
    EXPECT_EQ(shortest, (std::vector<Path>{{0, 1, 3}, {0, 2, 3}}));
    EXPECT_EQ(oracle::enumerate_simple_paths(g, 100).paths.size(), 3u);
}

TEST(Oracle, BruteMinimumOnSpecFamilies) {
    EXPECT_EQ(oracle::brute_min_tracking(shortest_paths(diamond()), 4, 4), 1u);
    EXPECT_EQ(oracle::brute_min_tracking(shortest_paths(path3()), 3, 3), 0u);
    std::vector<std::vector<Vertex>> triangle{{1, 2}, {2, 3}, {1, 3}};
    EXPECT_EQ(oracle::brute_min_tracking(triangle, 4, 4), 2u);
    EXPECT_EQ(oracle::brute_min_tracking(triangle, 4, 1), std::nullopt);
}

TEST(Oracle, WitnessOrderIsSizeThenLexicographic) {
    auto w = oracle::brute_min_tracking_witness(shortest_paths(diamond()), 4, 4);
    ASSERT_TRUE(w);
    EXPECT_EQ(*w, (std::vector<Vertex>{1}));
}

TEST(Oracle, RefusesLargeUniverse) {
    std::vector<std::vector<Vertex>> family{{0}, {1}};
    EXPECT_THROW(oracle::brute_min_tracking(family, 21, 2), std::invalid_argument);
}

TEST(Oracle, TracksIsTheDefinition) {
    std::vector<std::vector<Vertex>> family{{0, 1, 3}, {0, 2, 3}};
    EXPECT_FALSE(oracle::tracks(family, std::vector<Vertex>{}));
    EXPECT_FALSE(oracle::tracks(family, std::vector<Vertex>{0, 3}));
    EXPECT_TRUE(oracle::tracks(family, std::vector<Vertex>{1}));
    EXPECT_TRUE(oracle::tracks(family, std::vector<Vertex>{2}));
}

// Minimum size does not depend on how the universe is numbered.
TEST(OracleProperty, PermutationInvariance) {
    gen::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = rng.between(2, 8);
        const std::size_t m = rng.between(1, std::min<std::size_t>(8, std::size_t{1} << n));
        auto sys = gen::random_set_system(rng, n, m, 0.5);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
        std::vector<std::vector<Vertex>> renamed;
        for (const auto& s : sys.family()) {
            std::vector<Vertex> r;
            for (Vertex x : s) r.push_back(perm[x]);
            std::sort(r.begin(), r.end());
            renamed.push_back(r);
        }
        EXPECT_EQ(oracle::brute_min_tracking(sys.family(), n, n),
                  oracle::brute_min_tracking(renamed, n, n));
    }
}

TEST(OracleProperty, SimplePathsContainShortestPaths) {
    gen::Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = gen::random_connected_graph(rng, rng.between(3, 9), 0.3);
        auto all = oracle::enumerate_simple_paths(g, 1 << 20).paths;
        auto shortest = shortest_paths(g);
        ASSERT_FALSE(shortest.empty());
        std::size_t min_len = all.front().size();
        for (const auto& p : all) min_len = std::min(min_len, p.size());
        std::vector<Path> filtered;
        for (const auto& p : all) {
            if (p.size() == min_len) filtered.push_back(p);
        }
        std::sort(filtered.begin(), filtered.end());
        std::sort(shortest.begin(), shortest.end());
        EXPECT_EQ(filtered, shortest);
    }
}
