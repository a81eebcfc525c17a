#include "tracking/shortest_paths.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "tracking/dag.hpp"
#include "tracking/oracle.hpp"

namespace tracking {

namespace {

class BackwardEnumerator {
public:
    BackwardEnumerator(const LayeredGraph& lg, std::size_t cap) : lg_(lg), cap_(cap) {}

    PathList run() {
        reversed_.push_back(lg_.base.sink());
        walk(lg_.base.sink());
        return std::move(result_);
    }

private:
    bool walk(Vertex v) {
        if (v == lg_.base.source()) {
            result_.paths.emplace_back(reversed_.rbegin(), reversed_.rend());
            if (result_.paths.size() > cap_) {
                result_.cap_exceeded = true;
                return false;
            }
            return true;
        }
        for (Vertex u : lg_.base.neighbors(v)) {
            if (lg_.levels[u] + 1 != lg_.levels[v]) continue;
            reversed_.push_back(u);
            bool go_on = walk(u);
            reversed_.pop_back();
            if (!go_on) return false;
        }
        return true;
    }

    const LayeredGraph& lg_;
    std::size_t cap_;
    Path reversed_;
    PathList result_;
};

SolveReport no_path_report(const Graph& g) {
    SolveReport report;
    report.verdict = Verdict::yes;
    report.witness = TrackerSet{};
    report.reason = "destination unreachable; no s-t path to track";
    report.stats.paths = BigCount(0);
    report.stats.no_path = true;
    report.stats.witness_verified = true;
    report.relabeling = VertexRelabeling::identity(g.vertex_count());
    return report;
}

void merge_rule_1(ReductionStats& into, const ReductionStats& rule1) {
    into.rule1_edges_removed = rule1.rule1_edges_removed;
    into.rule1_vertices_removed = rule1.rule1_vertices_removed;
}

std::size_t two_to_the_or_max(std::size_t k) {
    if (k >= std::numeric_limits<std::size_t>::digits) return std::numeric_limits<std::size_t>::max();
    return std::size_t{1} << k;
}

}  // namespace

std::optional<Rule1Result> reduce_rule_1(const Graph& g) {
    const auto from_s = bfs_distances(g, g.source());
    const auto from_t = bfs_distances(g, g.sink());
    if (!from_s[g.sink()]) return std::nullopt;
    const std::uint32_t length = *from_s[g.sink()];

    auto on_shortest = [&](Vertex a, Vertex b) {
        return from_s[a] && from_t[b] && *from_s[a] + *from_t[b] + 1 == length;
    };
    std::vector<Edge> kept_edges;
    std::vector<bool> used(g.vertex_count(), false);
    for (const auto& e : g.edges()) {
        if (on_shortest(e.u, e.v) || on_shortest(e.v, e.u)) {
            kept_edges.push_back(e);
            used[e.u] = used[e.v] = true;
        }
    }

    std::vector<Vertex> kept;
    std::vector<Vertex> new_id(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!used[v]) continue;
        new_id[v] = static_cast<Vertex>(kept.size());
        kept.push_back(v);
    }
    std::vector<std::uint32_t> levels;
    levels.reserve(kept.size());
    for (Vertex v : kept) levels.push_back(*from_s[v]);
    for (auto& e : kept_edges) e = {new_id[e.u], new_id[e.v]};

    ReductionStats stats;
    stats.rule1_edges_removed = g.edge_count() - kept_edges.size();
    stats.rule1_vertices_removed = g.vertex_count() - kept.size();
    Graph base(kept.size(), std::move(kept_edges), new_id[g.source()], new_id[g.sink()]);
    return Rule1Result{LayeredGraph{std::move(base), std::move(levels), length},
                       VertexRelabeling(std::move(kept)), stats};
}

PathList enumerate_shortest_paths(const LayeredGraph& lg, std::size_t cap) {
    return BackwardEnumerator(lg, cap).run();
}

SetSystem to_set_system(std::span<const Path> paths, std::size_t n) {
    std::vector<ElementSet> family;
    family.reserve(paths.size());
    std::size_t bound = 0;
    for (const auto& p : paths) {
        ElementSet s(p.begin(), p.end());
        std::sort(s.begin(), s.end());
        bound = std::max(bound, s.size());
        family.push_back(std::move(s));
    }
    return SetSystem(n, std::move(family), bound);
}

Digraph to_dag(const LayeredGraph& lg) {
    std::vector<Edge> arcs;
    arcs.reserve(lg.base.edge_count());
    for (const auto& e : lg.base.edges()) {
        if (lg.levels[e.u] < lg.levels[e.v]) {
            arcs.push_back({e.u, e.v});
        } else {
            arcs.push_back({e.v, e.u});
        }
    }
    return Digraph(lg.base.vertex_count(), std::move(arcs), lg.base.source(), lg.base.sink());
}

SolveReport solve_shortest_paths(const Graph& g, std::size_t k,
                                 const ShortestPathOptions& options) {
    auto rule1 = reduce_rule_1(g);
    if (!rule1) return no_path_report(g);

    const LayeredGraph& lg = rule1->layered;
    DagSolveOptions dag_options;
    dag_options.threads = options.threads;
    dag_options.verify_limit = options.verify_limit;
    SolveReport report = solve_dag(to_dag(lg), k, dag_options);

    merge_rule_1(report.stats.reductions, rule1->stats);
    report.stats.set_size_bound = lg.length + 1;
    report.relabeling = rule1->relabeling.compose(report.relabeling);
    if (report.witness) {
        report.witness = TrackerSet(rule1->relabeling.map(report.witness->members()));
    }

    if (report.verdict == Verdict::yes && report.stats.paths &&
        *report.stats.paths <= options.verify_limit) {
        auto listed = enumerate_shortest_paths(lg, static_cast<std::size_t>(options.verify_limit));
        std::vector<Path> original;
        original.reserve(listed.paths.size());
        for (const auto& p : listed.paths) original.push_back(rule1->relabeling.map_sequence(p));
        if (!oracle::tracks(original, report.witness->members())) {
            throw std::logic_error("shortest-path witness fails the definition-level check");
        }
        report.stats.witness_verified = true;
    }
    return report;
}

SolveReport solve_shortest_paths_by_set_system(const Graph& g, std::size_t k,
                                               std::optional<std::uint64_t> cap) {
    auto rule1 = reduce_rule_1(g);
    if (!rule1) return no_path_report(g);

    const LayeredGraph& lg = rule1->layered;
    const std::size_t budget = two_to_the_or_max(k);
    const std::size_t limit = cap ? static_cast<std::size_t>(*cap)
                                  : (budget == std::numeric_limits<std::size_t>::max() ? budget
                                                                                       : budget + 1);
    auto listed = enumerate_shortest_paths(lg, limit);

    SolveReport report;
    report.stats.set_size_bound = lg.length + 1;
    merge_rule_1(report.stats.reductions, rule1->stats);
    report.stats.reduced_vertices = lg.base.vertex_count();
    report.relabeling = rule1->relabeling;

    if (listed.cap_exceeded) {
        report.stats.paths = BigCount(listed.paths.size());
        report.stats.lower_bound = tracking_lower_bound(listed.paths.size());
        if (listed.paths.size() > budget) {
            report.verdict = Verdict::no;
            report.reason = "more than 2^" + std::to_string(k) + " = " + std::to_string(budget) +
                            " shortest paths";
        } else {
            report.verdict = Verdict::undecided;
            report.reason = "enumeration cap " + std::to_string(limit) +
                            " exceeded before a decision";
        }
        return report;
    }

    auto sys = to_set_system(listed.paths, lg.base.vertex_count());
    SolveReport inner = solve_tracking_set(sys, k);
    report.verdict = inner.verdict;
    report.reason = inner.reason;
    report.stats.paths = inner.stats.paths;
    report.stats.lower_bound = inner.stats.lower_bound;
    report.stats.branch_nodes = inner.stats.branch_nodes;
    report.stats.witness_verified = inner.stats.witness_verified;
    if (inner.witness) report.witness = TrackerSet(rule1->relabeling.map(inner.witness->members()));
    return report;
}

}  // namespace tracking
