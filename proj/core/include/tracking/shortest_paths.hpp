#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tracking/graph.hpp"
#include "tracking/report.hpp"
#include "tracking/set_system.hpp"

namespace tracking {

// A graph in which every vertex and edge lies on a shortest s-t path, so
// every edge joins consecutive BFS levels.
struct LayeredGraph {
    Graph base;
    std::vector<std::uint32_t> levels;
    // dist(s, t)
    std::uint32_t length = 0;
};

struct Rule1Result {
    LayeredGraph layered;
    VertexRelabeling relabeling;
    ReductionStats stats;
};

// Keeps edge ab iff dist(s,a) + dist(b,t) + 1 == dist(s,t) in one of the two
// orientations, then drops isolated vertices and renumbers densely in
// ascending original order. std::nullopt when t is unreachable from s.
std::optional<Rule1Result> reduce_rule_1(const Graph& g);

struct PathList {
    std::vector<Path> paths;
    // Set once more than `cap` paths materialized; `paths` then holds cap + 1.
    bool cap_exceeded = false;
};

// All shortest s-t paths of a layered graph, each listed from s to t. Paths
// are grown backwards from t through lower-level neighbors in ascending id
// order, so every branch of the search ends in a path.
PathList enumerate_shortest_paths(const LayeredGraph& lg, std::size_t cap);

// Universe = vertices, one family set per path vertex set.
SetSystem to_set_system(std::span<const Path> paths, std::size_t n);

// Orients every edge from the lower level to the higher one.
Digraph to_dag(const LayeredGraph& lg);

struct ShortestPathOptions {
    unsigned threads = 1;
    std::uint64_t verify_limit = 1 << 16;
};

// Rule 1, orientation into a DAG, then solve_dag. The witness is mapped back
// to the input ids and re-checked on the enumerated shortest-path family when
// that family has at most verify_limit members.
SolveReport solve_shortest_paths(const Graph& g, std::size_t k,
                                 const ShortestPathOptions& options = {});

// Alternative route: Rule 1, explicit enumeration with `cap` (default
// 2^k + 1), the set-system view, then solve_tracking_set. Undecided when the
// cap stops the enumeration before a decision is possible.
SolveReport solve_shortest_paths_by_set_system(const Graph& g, std::size_t k,
                                               std::optional<std::uint64_t> cap = std::nullopt);

}  // namespace tracking
