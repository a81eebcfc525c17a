#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tracking/graph.hpp"
#include "tracking/report.hpp"

namespace tracking {

using Element = Vertex;
// Sorted, duplicate-free list of element ids.
using ElementSet = std::vector<Element>;

// A universe {0..universe_size-1} and a family of pairwise distinct subsets.
// Sets are normalized to sorted order on construction. Throws
// std::invalid_argument on out-of-range elements, repeated elements inside a
// set, repeated sets, or a set larger than the optional size bound d.
class SetSystem {
public:
    SetSystem(std::size_t universe_size, std::vector<ElementSet> family,
              std::optional<std::size_t> size_bound = std::nullopt);

    std::size_t universe_size() const { return universe_size_; }
    std::size_t set_count() const { return family_.size(); }
    const std::vector<ElementSet>& family() const { return family_; }
    const ElementSet& set(std::size_t i) const { return family_[i]; }
    std::optional<std::size_t> size_bound() const { return size_bound_; }
    std::size_t max_set_size() const;

private:
    std::size_t universe_size_;
    std::vector<ElementSet> family_;
    std::optional<std::size_t> size_bound_;
};

struct HittingInstance {
    std::size_t universe_size = 0;
    std::vector<ElementSet> family;
    // 2d when the source system was d-bounded.
    std::optional<std::size_t> bound;
};

struct HittingResult {
    std::optional<TrackerSet> witness;
    std::uint64_t branch_nodes = 0;
    // Family size after removing repeated sets.
    std::size_t distinct_sets = 0;
};

// One set per unordered pair {R, S} of family members, the symmetric
// difference R xor S, listed in pair order (0,1), (0,2), ..., (m-2,m-1).
HittingInstance reduce_to_hitting(const SetSystem& sys);

// Bounded-depth branching over the elements of the smallest unhit set,
// elements tried in ascending order, with budgets 0, 1, ..., k in turn.
// The witness is therefore of minimum size; it is re-checked against every
// family member before it is returned.
HittingResult solve_hitting(const HittingInstance& h, std::size_t k);

bool hits_all(const HittingInstance& h, const TrackerSet& t);

// True iff T ∩ S_i != T ∩ S_j for every pair i != j.
bool is_tracking_set(const SetSystem& sys, const TrackerSet& t);

// ⌈lg m⌉, and 0 for m <= 1.
std::size_t tracking_lower_bound(std::size_t m);

// Minimum tracking set of size <= k through the hitting-set reduction, gated
// by the ⌈lg m⌉ bound.
SolveReport solve_tracking_set(const SetSystem& sys, std::size_t k);

// Elements whose incidence column (which sets contain them) is constant or
// repeats an earlier column cannot help separate sets. The kernel keeps the
// first element of every other distinct column. With m <= 2^k this leaves at
// most 2^m elements.
struct ElementKernel {
    SetSystem system;
    // kernel element id -> source element id
    std::vector<Element> source_element;
};

ElementKernel kernelize_elements(const SetSystem& sys);

// Second route: ⌈lg m⌉ gate, element kernel, then a scan of kernel subsets
// by size then lexicographic order.
SolveReport solve_tracking_set_by_subsets(const SetSystem& sys, std::size_t k);

// Incidence transpose: universe {0..m-1}, one set {j : x in S_j} per element x
// in element order. Throws std::invalid_argument if two elements have the same
// incidence column (the transpose would repeat a set).
SetSystem dualize(const SetSystem& sys);

// For a test-cover reading of `tests` (universe = items, family = tests):
// true iff every pair of items is separated by some chosen test.
bool is_test_cover(const SetSystem& tests, std::span<const std::size_t> chosen);

}  // namespace tracking
