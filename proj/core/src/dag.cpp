#include "tracking/dag.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "combinations.hpp"
#include "tracking/oracle.hpp"

namespace tracking {

namespace {

// Mutable adjacency used while the reduction rules run. Vertex ids stay those
// of the input until compact().
class WorkingDag {
public:
    explicit WorkingDag(const Digraph& d)
        : out_(d.vertex_count()), in_(d.vertex_count()), alive_(d.vertex_count(), true),
          s_(d.source()), t_(d.sink()) {
        for (const auto& a : d.arcs()) {
            out_[a.u].insert(a.v);
            in_[a.v].insert(a.u);
        }
    }

    bool singleton() const { return s_ == t_; }
    bool interior(Vertex v) const { return v != s_ && v != t_; }

    void remove_arc(Vertex u, Vertex v) {
        out_[u].erase(v);
        in_[v].erase(u);
    }

    // Returns the number of arcs removed with the vertex.
    std::size_t remove_vertex(Vertex v) {
        std::size_t arcs = out_[v].size() + in_[v].size();
        for (Vertex w : out_[v]) in_[w].erase(v);
        for (Vertex u : in_[v]) out_[u].erase(v);
        out_[v].clear();
        in_[v].clear();
        alive_[v] = false;
        return arcs;
    }

    // Steps of rule 2, run to exhaustion with a work queue.
    bool apply_rule_2(ReductionStats& stats) {
        bool changed = false;
        for (Vertex u : std::vector<Vertex>(in_[s_].begin(), in_[s_].end())) {
            remove_arc(u, s_);
            ++stats.rule2_arcs_removed;
            changed = true;
        }
        for (Vertex w : std::vector<Vertex>(out_[t_].begin(), out_[t_].end())) {
            remove_arc(t_, w);
            ++stats.rule2_arcs_removed;
            changed = true;
        }
        std::vector<Vertex> work;
        for (Vertex v = 0; v < alive_.size(); ++v) {
            if (alive_[v] && interior(v) && dangling(v)) work.push_back(v);
        }
        while (!work.empty()) {
            Vertex v = work.back();
            work.pop_back();
            if (!alive_[v] || !dangling(v)) continue;
            std::vector<Vertex> touched(out_[v].begin(), out_[v].end());
            touched.insert(touched.end(), in_[v].begin(), in_[v].end());
            stats.rule2_arcs_removed += remove_vertex(v);
            ++stats.rule2_vertices_removed;
            changed = true;
            for (Vertex w : touched) {
                if (alive_[w] && interior(w) && dangling(w)) work.push_back(w);
            }
        }
        return changed;
    }

    bool apply_rule_3(ReductionStats& stats) {
        bool changed = false;
        while (!singleton()) {
            if (in_[s_].empty() && out_[s_].size() == 1) {
                Vertex next = *out_[s_].begin();
                remove_vertex(s_);
                s_ = next;
            } else if (out_[t_].empty() && in_[t_].size() == 1) {
                Vertex prev = *in_[t_].begin();
                remove_vertex(t_);
                t_ = prev;
            } else {
                break;
            }
            ++stats.rule3_endpoint_moves;
            changed = true;
        }
        return changed;
    }

    bool apply_rule_4(ReductionStats& stats) {
        bool changed = false;
        for (Vertex x = 0; x < alive_.size(); ++x) {
            while (alive_[x] && interior(x) && passes_through(x)) {
                Vertex y = *out_[x].begin();
                if (!interior(y) || !passes_through(y)) break;
                Vertex z = *out_[y].begin();
                remove_vertex(y);
                out_[x].insert(z);
                in_[z].insert(x);
                ++stats.rule4_contractions;
                changed = true;
            }
        }
        return changed;
    }

    DagReduction compact(ReductionStats stats) const {
        std::vector<Vertex> kept;
        std::vector<Vertex> new_id(alive_.size(), 0);
        for (Vertex v = 0; v < alive_.size(); ++v) {
            if (!alive_[v]) continue;
            new_id[v] = static_cast<Vertex>(kept.size());
            kept.push_back(v);
        }
        std::vector<Edge> arcs;
        for (Vertex u : kept) {
            for (Vertex w : out_[u]) arcs.push_back({new_id[u], new_id[w]});
        }
        return DagReduction{Digraph(kept.size(), std::move(arcs), new_id[s_], new_id[t_]),
                            VertexRelabeling(std::move(kept)), stats};
    }

private:
    bool dangling(Vertex v) const { return in_[v].empty() || out_[v].empty(); }
    bool passes_through(Vertex v) const { return in_[v].size() == 1 && out_[v].size() == 1; }

    std::vector<std::set<Vertex>> out_;
    std::vector<std::set<Vertex>> in_;
    std::vector<bool> alive_;
    Vertex s_;
    Vertex t_;
};

BigCount power_of_two(std::size_t k) { return BigCount(1) << k; }

std::size_t ceil_log2(const BigCount& x) {
    if (x <= 1) return 0;
    return static_cast<std::size_t>(boost::multiprecision::msb(BigCount(x - 1))) + 1;
}

std::string to_decimal(const BigCount& c) { return c.str(); }

}  // namespace

DagReduction reduce_rule_2(const Digraph& d) {
    WorkingDag w(d);
    ReductionStats stats;
    w.apply_rule_2(stats);
    return w.compact(stats);
}

DagReduction reduce_rule_3(const Digraph& d) {
    WorkingDag w(d);
    ReductionStats stats;
    w.apply_rule_3(stats);
    return w.compact(stats);
}

DagReduction reduce_rule_4(const Digraph& d) {
    WorkingDag w(d);
    ReductionStats stats;
    w.apply_rule_4(stats);
    return w.compact(stats);
}

ReducedDag reduce_dag(const Digraph& d) {
    if (!is_acyclic(d)) throw std::invalid_argument("digraph has a directed cycle");
    WorkingDag w(d);
    ReductionStats stats;
    bool changed = true;
    while (changed) {
        ++stats.passes;
        changed = false;
        changed |= w.apply_rule_2(stats);
        changed |= w.apply_rule_3(stats);
        changed |= w.apply_rule_4(stats);
    }
    auto compacted = w.compact(stats);
    ReducedDag out{std::move(compacted.dag), std::move(compacted.relabeling), compacted.stats,
                   DagShape::reduced};
    if (out.base.is_singleton()) {
        out.shape = DagShape::singleton;
    } else if (out.base.out_degree(out.base.source()) == 0) {
        out.shape = DagShape::no_path;
    }
    return out;
}

PathCount count_paths(const Digraph& d, std::optional<BigCount> cap) {
    auto order = topological_order(d);
    if (!order) throw std::invalid_argument("digraph has a directed cycle");
    if (d.is_singleton()) {
        if (cap && *cap < 1) return {*cap, true};
        return {BigCount(1), false};
    }

    // Clamping every partial count at cap + 1 keeps the final comparison exact.
    std::optional<BigCount> clamp;
    if (cap) clamp = *cap + 1;
    std::vector<BigCount> paths_to(d.vertex_count());
    paths_to[d.source()] = 1;
    for (Vertex v : *order) {
        if (paths_to[v] == 0) continue;
        for (Vertex w : d.out_neighbors(v)) {
            paths_to[w] += paths_to[v];
            if (clamp && paths_to[w] > *clamp) paths_to[w] = *clamp;
        }
    }
    PathCount result{paths_to[d.sink()], false};
    if (cap && result.value > *cap) {
        result.value = *cap;
        result.saturated = true;
    }
    return result;
}

std::size_t path_lower_bound(const Digraph& reduced) {
    const std::size_t n = reduced.vertex_count();
    long long branching = 1;
    for (Vertex v = 0; v < n; ++v) {
        if (v == reduced.sink()) continue;
        branching += static_cast<long long>(reduced.out_degree(v)) - 1;
    }
    const long long by_size = static_cast<long long>((n + 4) / 5);
    return static_cast<std::size_t>(std::max({branching, by_size, 0LL}));
}

TrackingVerifier::TrackingVerifier(const Digraph& d)
    : dag_(&d), position_(d.vertex_count()), count_(d.vertex_count(), 0),
      blocked_(d.vertex_count(), 0) {
    auto order = topological_order(d);
    if (!order) throw std::invalid_argument("digraph has a directed cycle");
    order_ = std::move(*order);
    for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = i;
}

void TrackingVerifier::count_from(Vertex u) {
    count_[u] = 1;
    for (std::size_t i = position_[u]; i < order_.size(); ++i) {
        Vertex w = order_[i];
        if (count_[w] == 0 || (w != u && blocked_[w])) continue;
        for (Vertex x : dag_->out_neighbors(w)) {
            count_[x] = static_cast<std::uint8_t>(std::min(2, count_[x] + count_[w]));
        }
    }
}

void TrackingVerifier::clear_from(Vertex u) {
    for (std::size_t i = position_[u]; i < order_.size(); ++i) count_[order_[i]] = 0;
}

std::optional<std::pair<Vertex, Vertex>> TrackingVerifier::violating_pair(
    std::span<const Vertex> trackers) {
    std::vector<Vertex> terminals(trackers.begin(), trackers.end());
    terminals.push_back(dag_->source());
    terminals.push_back(dag_->sink());
    std::sort(terminals.begin(), terminals.end(),
              [this](Vertex a, Vertex b) { return position_[a] < position_[b]; });
    terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());

    for (Vertex v : trackers) blocked_[v] = 1;
    std::optional<std::pair<Vertex, Vertex>> found;
    for (std::size_t i = 0; i < terminals.size() && !found; ++i) {
        Vertex u = terminals[i];
        count_from(u);
        for (std::size_t j = i + 1; j < terminals.size(); ++j) {
            if (count_[terminals[j]] >= 2) {
                found.emplace(u, terminals[j]);
                break;
            }
        }
        clear_from(u);
    }
    for (Vertex v : trackers) blocked_[v] = 0;
    return found;
}

bool TrackingVerifier::check(std::span<const Vertex> trackers) {
    return !violating_pair(trackers).has_value();
}

// Walks back from `to` to `from` over predecessors that carry a count and
// are not blocked, optionally forcing the first step through `via`.
Path TrackingVerifier::backtrack(Vertex from, Vertex to, std::optional<Vertex> via) const {
    Path reversed{to};
    Vertex c = to;
    if (via) {
        c = *via;
        reversed.push_back(c);
    }
    while (c != from) {
        for (Vertex p : dag_->in_neighbors(c)) {
            if (count_[p] > 0 && (p == from || !blocked_[p])) {
                c = p;
                break;
            }
        }
        reversed.push_back(c);
    }
    return Path(reversed.rbegin(), reversed.rend());
}

std::optional<std::pair<Path, Path>> TrackingVerifier::violating_paths(
    std::span<const Vertex> trackers) {
    auto pair = violating_pair(trackers);
    if (!pair) return std::nullopt;
    auto [u, v] = *pair;

    for (Vertex x : trackers) blocked_[x] = 1;
    count_from(u);
    // Descend from v while the u-v paths funnel through a single predecessor;
    // the first vertex with two usable predecessors splits them.
    Path tail{v};
    Vertex c = v;
    std::vector<Vertex> usable;
    for (;;) {
        usable.clear();
        for (Vertex p : dag_->in_neighbors(c)) {
            if (count_[p] > 0 && (p == u || !blocked_[p])) usable.push_back(p);
        }
        if (usable.size() >= 2) break;
        c = usable.front();
        tail.push_back(c);
    }
    Path first = backtrack(u, c, usable[0]);
    Path second = backtrack(u, c, usable[1]);
    clear_from(u);
    for (Vertex x : trackers) blocked_[x] = 0;

    // s -> u and v -> t; every vertex is on an s-t path, so these exist.
    Path head;
    for (Vertex w = u; w != dag_->source(); w = dag_->in_neighbors(w).front()) head.push_back(w);
    head.push_back(dag_->source());
    std::reverse(head.begin(), head.end());
    head.pop_back();  // u itself comes from the middle part
    Path rest;
    for (Vertex w = v; w != dag_->sink();) {
        w = dag_->out_neighbors(w).front();
        rest.push_back(w);
    }

    auto assemble = [&](const Path& middle) {
        Path full = head;
        full.insert(full.end(), middle.begin(), middle.end());
        // tail holds v, ..., c; middle already ends at c.
        for (std::size_t i = tail.size() - 1; i-- > 0;) full.push_back(tail[i]);
        full.insert(full.end(), rest.begin(), rest.end());
        return full;
    };
    return std::make_pair(assemble(first), assemble(second));
}

bool verify_tracking_condition(const Digraph& d, const TrackerSet& trackers) {
    TrackingVerifier verifier(d);
    return verifier.check(trackers.members());
}

namespace {

constexpr std::uint64_t kNoRank = std::numeric_limits<std::uint64_t>::max();

// Smallest lexicographic rank among the `total` subsets of `size` pool
// vertices that passes, or kNoRank. Workers claim blocks of ranks in order,
// so the answer does not depend on the number of workers.
std::uint64_t first_passing_rank(std::vector<TrackingVerifier>& verifiers, const std::vector<Vertex>& pool,
                                 std::size_t size, std::uint64_t total, const detail::BinomialTable& binom) {
    constexpr std::uint64_t kBlock = 1 << 12;
    std::atomic<std::uint64_t> next_block{0};
    std::atomic<std::uint64_t> best{kNoRank};

    auto work = [&](TrackingVerifier& verifier) {
        std::vector<Vertex> candidate(size);
        for (;;) {
            const std::uint64_t start = next_block.fetch_add(1) * kBlock;
            if (start >= total || start > best.load(std::memory_order_relaxed)) return;
            const std::uint64_t stop = std::min(total, start + kBlock);
            auto idx = detail::unrank_combination(start, pool.size(), size, binom);
            for (std::uint64_t rank = start; rank < stop; ++rank) {
                for (std::size_t i = 0; i < size; ++i) candidate[i] = pool[idx[i]];
                if (verifier.check(candidate)) {
                    std::uint64_t seen = best.load();
                    while (rank < seen && !best.compare_exchange_weak(seen, rank)) {
                    }
                    return;
                }
                detail::next_combination(idx, pool.size());
            }
        }
    };

    const std::uint64_t blocks = total / kBlock + 1;
    const std::size_t workers = static_cast<std::size_t>(std::min<std::uint64_t>(verifiers.size(), blocks));
    if (workers <= 1) {
        work(verifiers[0]);
    } else {
        std::vector<std::jthread> pool_threads;
        for (std::size_t w = 0; w < workers; ++w) pool_threads.emplace_back([&, w] { work(verifiers[w]); });
    }
    return best.load();
}

}  // namespace

SolveReport solve_dag(const Digraph& d, std::size_t k, const DagSolveOptions& options) {
    ReducedDag reduced = reduce_dag(d);
    const Digraph& g = reduced.base;

    SolveReport report;
    report.stats.reductions = reduced.stats;
    report.stats.reduced_vertices = g.vertex_count();
    report.relabeling = reduced.relabeling;

    if (reduced.shape == DagShape::singleton) {
        report.verdict = Verdict::yes;
        report.witness = TrackerSet{};
        report.reason = "reduced to a single vertex; one s-t path";
        report.stats.paths = BigCount(1);
        report.stats.singleton = true;
        report.stats.witness_verified = true;
        return report;
    }
    if (reduced.shape == DagShape::no_path) {
        report.verdict = Verdict::yes;
        report.witness = TrackerSet{};
        report.reason = "no s-t path; nothing to track";
        report.stats.paths = BigCount(0);
        report.stats.no_path = true;
        report.stats.witness_verified = true;
        return report;
    }

    const BigCount paths = count_paths(g).value;
    report.stats.paths = paths;
    report.stats.lower_bound = ceil_log2(paths);
    const BigCount budget = power_of_two(k);

    if (BigCount(g.vertex_count()) > 5 * budget) {
        report.verdict = Verdict::no;
        report.reason = "reduced DAG has n = " + std::to_string(g.vertex_count()) +
                        " > 5·2^" + std::to_string(k) + " = " + to_decimal(5 * budget) +
                        " vertices";
        return report;
    }
    if (paths > budget) {
        report.verdict = Verdict::no;
        report.reason = "lower bound ⌈lg " + to_decimal(paths) + "⌉ = " +
                        std::to_string(report.stats.lower_bound);
        return report;
    }

    std::vector<Vertex> pool;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (v != g.source() && v != g.sink()) pool.push_back(v);
    }
    std::vector<TrackingVerifier> verifiers(std::max(1U, options.threads), TrackingVerifier(g));

    const detail::BinomialTable binom(pool.size(), std::min(k, pool.size()));
    for (std::size_t size = 0; size <= std::min(k, pool.size()); ++size) {
        const std::uint64_t total = binom(pool.size(), size);
        const std::uint64_t hit = first_passing_rank(verifiers, pool, size, total, binom);
        if (hit == kNoRank) {
            report.stats.subsets_tried += total;
            continue;
        }
        report.stats.subsets_tried += hit + 1;
        std::vector<Vertex> found;
        for (std::size_t i : detail::unrank_combination(hit, pool.size(), size, binom)) found.push_back(pool[i]);
        TrackerSet witness(reduced.relabeling.map(found));

        if (paths <= options.verify_limit) {
            auto all = oracle::enumerate_all_paths(d, static_cast<std::size_t>(options.verify_limit));
            if (!all.cap_exceeded) {
                if (!oracle::tracks(all.paths, witness.members())) {
                    throw std::logic_error("DAG witness fails the definition-level check");
                }
                report.stats.witness_verified = true;
            }
        }
        report.verdict = Verdict::yes;
        report.witness = std::move(witness);
        return report;
    }
    report.verdict = Verdict::no;
    report.reason = "no tracking set of size <= " + std::to_string(k) +
                    " (exhaustive subset scan)";
    return report;
}

}  // namespace tracking
