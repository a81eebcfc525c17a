#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tracking/graph.hpp"
#include "tracking/report.hpp"

namespace tracking {

// Result of one reduction step: the reduced digraph and the map from its ids
// back to the input's ids.
struct DagReduction {
    Digraph dag;
    VertexRelabeling relabeling;
    ReductionStats stats;
};

enum class DagShape {
    reduced,    // every reduced-DAG invariant holds
    singleton,  // all s-t paths collapsed into one vertex: one path, zero trackers
    no_path,    // t is not reachable from s: only s and t remain
};

struct ReducedDag {
    Digraph base;
    VertexRelabeling relabeling;
    ReductionStats stats;
    DagShape shape = DagShape::reduced;
};

// Deletes arcs into s, arcs out of t, and (repeatedly) interior vertices with
// no in-arcs or no out-arcs. Afterwards every vertex and arc is on an s-t path.
DagReduction reduce_rule_2(const Digraph& d);

// While s has a single out-neighbor u, delete s and make u the source; same
// for t and a single in-neighbor. Expects a rule-2 fixpoint.
DagReduction reduce_rule_3(const Digraph& d);

// For an arc (x, y) between interior vertices of degree two, with y -> z,
// delete y and add (x, z). Expects a rule-2/3 fixpoint.
DagReduction reduce_rule_4(const Digraph& d);

// Rules 2, 3, 4 in that order, repeated until a full pass changes nothing.
// Throws std::invalid_argument on a cyclic digraph.
ReducedDag reduce_dag(const Digraph& d);

// s-t path count by dynamic programming over a topological order.
// When a cap is given and the true count exceeds it, `saturated` is set and
// `value` equals the cap.
struct PathCount {
    BigCount value;
    bool saturated = false;
};

PathCount count_paths(const Digraph& d, std::optional<BigCount> cap = std::nullopt);

// max(1 + sum over v != t of (outdeg(v) - 1), ceil(n / 5)); a lower bound on
// the number of s-t paths of a reduced DAG.
std::size_t path_lower_bound(const Digraph& reduced);

// Checks that between every two vertices u, v of T ∪ {s, t} there is at most
// one u-v path once T \ {u, v} is deleted. One saturating count pass per
// terminal. The digraph must have every vertex and arc on an s-t path, in
// which case the answer equals "T is a tracking set".
//
// Holds scratch buffers, so one instance per thread.
class TrackingVerifier {
public:
    explicit TrackingVerifier(const Digraph& d);

    bool check(std::span<const Vertex> trackers);

    // The first (u, v) with two or more u-v paths, in terminal order.
    std::optional<std::pair<Vertex, Vertex>> violating_pair(std::span<const Vertex> trackers);

    // Two distinct s-t paths with the same intersection with `trackers`.
    std::optional<std::pair<Path, Path>> violating_paths(std::span<const Vertex> trackers);

private:
    void count_from(Vertex u);
    void clear_from(Vertex u);
    Path backtrack(Vertex from, Vertex to, std::optional<Vertex> via) const;

    const Digraph* dag_;
    std::vector<Vertex> order_;
    std::vector<std::size_t> position_;
    std::vector<std::uint8_t> count_;
    std::vector<std::uint8_t> blocked_;
};

bool verify_tracking_condition(const Digraph& d, const TrackerSet& trackers);

struct DagSolveOptions {
    unsigned threads = 1;
    // Witnesses are re-checked against explicitly enumerated paths of the
    // input when it has at most this many s-t paths.
    std::uint64_t verify_limit = 1 << 16;
};

// Reduce, apply the vertex-count and path-count gates, then scan subsets of
// the reduced interior vertices by size 0..k and lexicographic order. The
// first subset passing the tracking condition is returned in input ids.
// Throws std::invalid_argument on a cyclic digraph.
SolveReport solve_dag(const Digraph& d, std::size_t k, const DagSolveOptions& options = {});

}  // namespace tracking
