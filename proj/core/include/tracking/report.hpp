#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "tracking/graph.hpp"

namespace tracking {

using BigCount = boost::multiprecision::cpp_int;

enum class Verdict { yes, no, undecided };

const char* to_string(Verdict v);

// Counters collected by the reduction rules. Every field counts deletions or
// rewrites performed, so an already-reduced instance reports all zeros.
struct ReductionStats {
    std::size_t rule1_edges_removed = 0;
    std::size_t rule1_vertices_removed = 0;
    std::size_t rule2_arcs_removed = 0;
    std::size_t rule2_vertices_removed = 0;
    std::size_t rule3_endpoint_moves = 0;
    std::size_t rule4_contractions = 0;
    std::size_t kernel_elements_removed = 0;
    std::size_t passes = 0;

    std::size_t total() const {
        return rule1_edges_removed + rule1_vertices_removed + rule2_arcs_removed +
               rule2_vertices_removed + rule3_endpoint_moves + rule4_contractions +
               kernel_elements_removed;
    }
};

struct SolveStats {
    // Number of paths (or family sets) that must be told apart, when known.
    std::optional<BigCount> paths;
    std::size_t lower_bound = 0;
    ReductionStats reductions;
    std::size_t reduced_vertices = 0;
    std::uint64_t subsets_tried = 0;
    std::uint64_t branch_nodes = 0;
    // Vertices per shortest path (distance + 1); the d of the d-bounded
    // set-system view of a shortest-path instance.
    std::optional<std::size_t> set_size_bound;
    bool no_path = false;
    bool singleton = false;
    bool witness_verified = false;
};

struct SolveReport {
    Verdict verdict = Verdict::undecided;
    // In the caller's original ids. Present iff verdict == yes.
    std::optional<TrackerSet> witness;
    std::string reason;
    SolveStats stats;
    // Reduced instance id -> original id, for the instance the search ran on.
    VertexRelabeling relabeling;
};

std::string to_text(const SolveReport& report);

// Flat JSON object with keys result, witness, size, paths, reductions,
// reason, lower_bound, subsets_tried, verified.
std::string to_json(const SolveReport& report);

}  // namespace tracking
