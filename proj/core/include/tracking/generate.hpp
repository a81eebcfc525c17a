#pragma once

#include <cstdint>
#include <random>

#include "tracking/graph.hpp"
#include "tracking/set_system.hpp"

// Instance generators for tests, fuzzing and benchmarks. Every draw goes
// through Rng, which does its own range reduction, so a seed gives the same
// instance with any standard library.
namespace tracking::gen {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    // Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);
    // Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    double unit();
    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

// Random spanning tree plus each remaining pair with probability p; s and t
// are distinct random vertices. n >= 2.
Graph random_connected_graph(Rng& rng, std::size_t n, double extra_edge_prob);

// Arcs i -> j (i < j) with probability p, s = 0, t = n - 1. n >= 2.
Digraph random_dag(Rng& rng, std::size_t n, double arc_prob);

// Every interior vertex v gets one arc from a random u < v and one to a random
// w > v, so each vertex lies on an s-t path; other forward pairs become arcs
// with probability p. s = 0, t = n - 1. n >= 2.
Digraph random_st_dag(Rng& rng, std::size_t n, double extra_arc_prob);

// random_st_dag pushed through the reduction rules, redrawn until the result
// is a proper reduced DAG (not a singleton).
Digraph random_reduced_dag(Rng& rng, std::size_t raw_n, double extra_arc_prob);

// `levels` inner levels of 1..width vertices between s and t; consecutive
// levels are joined at random, each vertex keeping at least one edge to
// either side. Every s-t path through the levels is shortest.
Graph random_layered_graph(Rng& rng, std::size_t levels, std::size_t width, double edge_prob);

// m distinct subsets of {0..universe-1}, each element present with
// probability `density`. m <= 2^universe.
SetSystem random_set_system(Rng& rng, std::size_t universe, std::size_t m, double density);

// c diamonds in series: 3c + 1 vertices, 2^c shortest (and total) s-t paths.
Graph serial_diamonds(std::size_t c);
Digraph serial_diamonds_dag(std::size_t c);

// s and t joined through r middle vertices; minimum tracking set r - 1.
Graph diameter_two(std::size_t r);

// Spine 0 -> 1 -> ... -> r with every spine arc subdivided, a subdivided arc
// from each spine vertex to t, and one extra direct arc r -> t. Reduced,
// 3r + 3 vertices, r + 2 paths.
Digraph ladder_dag(std::size_t r);

}  // namespace tracking::gen
