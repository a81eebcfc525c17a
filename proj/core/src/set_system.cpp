#include "tracking/set_system.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "combinations.hpp"

namespace tracking {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

Bits to_bits(const ElementSet& s, std::size_t universe) {
    Bits b(universe);
    for (Element e : s) b.set(e);
    return b;
}

ElementSet intersect(const ElementSet& a, const std::vector<Vertex>& b) {
    ElementSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

class HittingBrancher {
public:
    HittingBrancher(std::vector<Bits> sets, std::size_t universe)
        : sets_(std::move(sets)), chosen_(universe) {}

    bool search(std::size_t budget) {
        ++nodes_;
        const Bits* smallest = nullptr;
        std::size_t smallest_size = 0;
        for (const auto& s : sets_) {
            if (s.intersects(chosen_)) continue;
            std::size_t c = s.count();
            if (!smallest || c < smallest_size) {
                smallest = &s;
                smallest_size = c;
            }
        }
        if (!smallest) return true;
        if (budget == 0) return false;
        for (auto e = smallest->find_first(); e != Bits::npos; e = smallest->find_next(e)) {
            chosen_.set(e);
            if (search(budget - 1)) return true;
            chosen_.reset(e);
        }
        return false;
    }

    TrackerSet chosen() const {
        std::vector<Vertex> members;
        for (auto e = chosen_.find_first(); e != Bits::npos; e = chosen_.find_next(e)) {
            members.push_back(static_cast<Vertex>(e));
        }
        return TrackerSet(std::move(members));
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    std::vector<Bits> sets_;
    Bits chosen_;
    std::uint64_t nodes_ = 0;
};

std::string lower_bound_reason(std::size_t m, std::size_t lb) {
    return "lower bound ⌈lg " + std::to_string(m) + "⌉ = " + std::to_string(lb);
}

SolveReport base_report(const SetSystem& sys) {
    SolveReport report;
    report.stats.paths = BigCount(sys.set_count());
    report.stats.lower_bound = tracking_lower_bound(sys.set_count());
    report.stats.set_size_bound = sys.max_set_size();
    report.stats.reduced_vertices = sys.universe_size();
    report.relabeling = VertexRelabeling::identity(sys.universe_size());
    return report;
}

// Shared prologue of both set-system routes: true when the report is final.
bool decide_trivially(const SetSystem& sys, std::size_t k, SolveReport& report) {
    if (sys.set_count() <= 1) {
        report.verdict = Verdict::yes;
        report.witness = TrackerSet{};
        report.reason = "at most one set; nothing to distinguish";
        report.stats.witness_verified = true;
        return true;
    }
    if (k < report.stats.lower_bound) {
        report.verdict = Verdict::no;
        report.reason = lower_bound_reason(sys.set_count(), report.stats.lower_bound);
        return true;
    }
    return false;
}

}  // namespace

SetSystem::SetSystem(std::size_t universe_size, std::vector<ElementSet> family,
                     std::optional<std::size_t> size_bound)
    : universe_size_(universe_size), family_(std::move(family)), size_bound_(size_bound) {
    for (std::size_t i = 0; i < family_.size(); ++i) {
        auto& s = family_[i];
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw std::invalid_argument("set " + std::to_string(i) + " repeats an element");
        }
        if (!s.empty() && s.back() >= universe_size_) {
            throw std::invalid_argument("set " + std::to_string(i) + " has element " +
                                        std::to_string(s.back()) + " outside the universe");
        }
        if (size_bound_ && s.size() > *size_bound_) {
            throw std::invalid_argument("set " + std::to_string(i) + " exceeds size bound " +
                                        std::to_string(*size_bound_));
        }
    }
    std::map<ElementSet, std::size_t> seen;
    for (std::size_t i = 0; i < family_.size(); ++i) {
        auto [it, inserted] = seen.emplace(family_[i], i);
        if (!inserted) {
            throw std::invalid_argument("sets " + std::to_string(it->second) + " and " +
                                        std::to_string(i) + " are identical");
        }
    }
}

std::size_t SetSystem::max_set_size() const {
    std::size_t best = 0;
    for (const auto& s : family_) best = std::max(best, s.size());
    return best;
}

HittingInstance reduce_to_hitting(const SetSystem& sys) {
    HittingInstance h;
    h.universe_size = sys.universe_size();
    if (sys.size_bound()) h.bound = 2 * *sys.size_bound();
    const auto& fam = sys.family();
    for (std::size_t i = 0; i < fam.size(); ++i) {
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
            ElementSet diff;
            std::set_symmetric_difference(fam[i].begin(), fam[i].end(), fam[j].begin(),
                                          fam[j].end(), std::back_inserter(diff));
            h.family.push_back(std::move(diff));
        }
    }
    return h;
}

HittingResult solve_hitting(const HittingInstance& h, std::size_t k) {
    auto family = h.family;
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());

    HittingResult result;
    result.distinct_sets = family.size();
    if (std::any_of(family.begin(), family.end(), [](const auto& s) { return s.empty(); })) {
        return result;
    }

    std::vector<Bits> bits;
    bits.reserve(family.size());
    for (const auto& s : family) bits.push_back(to_bits(s, h.universe_size));

    for (std::size_t budget = 0; budget <= k; ++budget) {
        HittingBrancher brancher(bits, h.universe_size);
        bool found = brancher.search(budget);
        result.branch_nodes += brancher.nodes();
        if (found) {
            result.witness = brancher.chosen();
            if (!hits_all(h, *result.witness)) {
                throw std::logic_error("hitting-set witness misses a family set");
            }
            break;
        }
        // Larger budgets cannot help once every element is available.
        if (budget >= h.universe_size) break;
    }
    return result;
}

bool hits_all(const HittingInstance& h, const TrackerSet& t) {
    return std::all_of(h.family.begin(), h.family.end(),
                       [&](const ElementSet& s) { return !intersect(s, t.members()).empty(); });
}

bool is_tracking_set(const SetSystem& sys, const TrackerSet& t) {
    std::vector<ElementSet> seen;
    seen.reserve(sys.set_count());
    for (const auto& s : sys.family()) seen.push_back(intersect(s, t.members()));
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

std::size_t tracking_lower_bound(std::size_t m) {
    if (m <= 1) return 0;
    return static_cast<std::size_t>(std::bit_width(m - 1));
}

SolveReport solve_tracking_set(const SetSystem& sys, std::size_t k) {
    SolveReport report = base_report(sys);
    if (decide_trivially(sys, k, report)) return report;

    auto hitting = solve_hitting(reduce_to_hitting(sys), k);
    report.stats.branch_nodes = hitting.branch_nodes;
    if (!hitting.witness) {
        report.verdict = Verdict::no;
        report.reason = "no hitting set of size <= " + std::to_string(k) + " for the " +
                        std::to_string(hitting.distinct_sets) + " pairwise differences";
        return report;
    }
    if (!is_tracking_set(sys, *hitting.witness)) {
        throw std::logic_error("hitting set does not track the set system");
    }
    report.verdict = Verdict::yes;
    report.witness = std::move(hitting.witness);
    report.stats.witness_verified = true;
    return report;
}

ElementKernel kernelize_elements(const SetSystem& sys) {
    const std::size_t m = sys.set_count();
    std::vector<Bits> columns(sys.universe_size(), Bits(m));
    for (std::size_t j = 0; j < m; ++j) {
        for (Element e : sys.set(j)) columns[e].set(j);
    }
    std::vector<Element> kept;
    std::map<Bits, Element> first_with;
    for (Element e = 0; e < sys.universe_size(); ++e) {
        const auto& col = columns[e];
        if (col.none() || col.all()) continue;
        if (first_with.emplace(col, e).second) kept.push_back(e);
    }
    std::vector<Element> new_id(sys.universe_size(), 0);
    for (std::size_t i = 0; i < kept.size(); ++i) new_id[kept[i]] = static_cast<Element>(i);

    std::vector<ElementSet> family;
    family.reserve(m);
    for (const auto& s : sys.family()) {
        ElementSet mapped;
        for (Element e : s) {
            if (std::binary_search(kept.begin(), kept.end(), e)) mapped.push_back(new_id[e]);
        }
        family.push_back(std::move(mapped));
    }
    // Dropped columns never separate two sets, so the mapped sets stay distinct.
    return ElementKernel{SetSystem(kept.size(), std::move(family)), std::move(kept)};
}

SolveReport solve_tracking_set_by_subsets(const SetSystem& sys, std::size_t k) {
    SolveReport report = base_report(sys);
    if (decide_trivially(sys, k, report)) return report;

    auto kernel = kernelize_elements(sys);
    const std::size_t pool = kernel.source_element.size();
    report.stats.reduced_vertices = pool;
    report.stats.reductions.kernel_elements_removed = sys.universe_size() - pool;
    report.relabeling = VertexRelabeling(kernel.source_element);

    for (std::size_t size = 0; size <= std::min(k, pool); ++size) {
        auto idx = detail::first_combination(size);
        do {
            ++report.stats.subsets_tried;
            std::vector<Vertex> members(idx.begin(), idx.end());
            TrackerSet candidate(std::move(members));
            if (is_tracking_set(kernel.system, candidate)) {
                TrackerSet witness(report.relabeling.map(candidate.members()));
                if (!is_tracking_set(sys, witness)) {
                    throw std::logic_error("kernel witness does not track the set system");
                }
                report.verdict = Verdict::yes;
                report.witness = std::move(witness);
                report.stats.witness_verified = true;
                return report;
            }
        } while (detail::next_combination(idx, pool));
    }
    report.verdict = Verdict::no;
    report.reason = "no tracking set of size <= " + std::to_string(k) +
                    " among " + std::to_string(pool) + " kernel elements";
    return report;
}

SetSystem dualize(const SetSystem& sys) {
    std::vector<ElementSet> tests(sys.universe_size());
    for (std::size_t j = 0; j < sys.set_count(); ++j) {
        for (Element e : sys.set(j)) tests[e].push_back(static_cast<Element>(j));
    }
    return SetSystem(sys.set_count(), std::move(tests));
}

bool is_test_cover(const SetSystem& tests, std::span<const std::size_t> chosen) {
    const std::size_t n = tests.universe_size();
    // Items are separated iff their membership signatures over the chosen
    // tests differ.
    std::vector<Bits> signature(n, Bits(chosen.size()));
    for (std::size_t c = 0; c < chosen.size(); ++c) {
        for (Element item : tests.set(chosen[c])) signature[item].set(c);
    }
    std::sort(signature.begin(), signature.end());
    return std::adjacent_find(signature.begin(), signature.end()) == signature.end();
}

}  // namespace tracking
