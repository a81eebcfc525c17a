#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tracking/graph.hpp"

// Brute-force ground truth. Nothing here uses BFS levels, reduction rules,
// path-count recurrences or the hitting-set reduction; it works from the
// definitions only and is exponential on purpose.
namespace tracking::oracle {

inline constexpr std::size_t kMaxUniverse = 20;

struct PathEnumeration {
    std::vector<Path> paths;
    bool cap_exceeded = false;
};

// Every simple directed s-t path by depth-first search; stops once more than
// `cap` paths have been found.
PathEnumeration enumerate_all_paths(const Digraph& d, std::size_t cap);

// Every simple undirected s-t path.
PathEnumeration enumerate_simple_paths(const Graph& g, std::size_t cap);

// Simple s-t paths of minimum length. The minimum length comes from
// edge relaxation rather than BFS, and the DFS prunes on it.
PathEnumeration enumerate_shortest_paths(const Graph& g, std::size_t cap);

// Definition-level check: the vertex sets of the given paths (or sets) have
// pairwise distinct intersections with `trackers`.
bool tracks(std::span<const std::vector<Vertex>> family, std::span<const Vertex> trackers);

// Smallest subset (by size, then lexicographic bitmask order) of the universe
// that tracks `family`, scanning sizes 0..max_k. Throws std::invalid_argument
// if universe > kMaxUniverse.
std::optional<std::vector<Vertex>> brute_min_tracking_witness(
    std::span<const std::vector<Vertex>> family, std::size_t universe, std::size_t max_k);

std::optional<std::size_t> brute_min_tracking(std::span<const std::vector<Vertex>> family,
                                              std::size_t universe, std::size_t max_k);

}  // namespace tracking::oracle
