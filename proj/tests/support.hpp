#pragma once

#include <vector>

#include "tracking/graph.hpp"
#include "tracking/oracle.hpp"
#include "tracking/set_system.hpp"

namespace tracking::testing {

// s = 0, a = 1, b = 2, t = 3 throughout.
inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, 0, 3); }
inline Digraph diamond_dag() { return Digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, 0, 3); }
inline Graph path3() { return Graph(3, {{0, 1}, {1, 2}}, 0, 2); }

inline std::vector<std::vector<Vertex>> families_of(const SetSystem& sys) { return sys.family(); }

inline std::vector<std::vector<Vertex>> all_paths(const Digraph& d) {
    return oracle::enumerate_all_paths(d, 1u << 20).paths;
}

inline std::vector<std::vector<Vertex>> shortest_paths(const Graph& g) {
    return oracle::enumerate_shortest_paths(g, 1u << 20).paths;
}

// Subset `mask` of {0..n-1} as a sorted id list.
inline std::vector<Vertex> subset(std::uint64_t mask, std::size_t n) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v) {
        if (mask >> v & 1) out.push_back(v);
    }
    return out;
}

}  // namespace tracking::testing
