#include "tracking/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace tracking::oracle {

namespace {

template <class Neighbors>
class PathDfs {
public:
    PathDfs(std::size_t n, Vertex s, Vertex t, Neighbors neighbors, std::size_t cap,
            std::size_t max_edges)
        : on_path_(n, false), t_(t), neighbors_(neighbors), cap_(cap), max_edges_(max_edges) {
        path_.push_back(s);
        on_path_[s] = true;
    }

    PathEnumeration run() {
        walk(path_.front());
        return std::move(result_);
    }

private:
    bool walk(Vertex v) {
        if (v == t_) {
            result_.paths.push_back(path_);
            if (result_.paths.size() > cap_) {
                result_.cap_exceeded = true;
                return false;
            }
            return true;
        }
        if (path_.size() - 1 >= max_edges_) return true;
        for (Vertex w : neighbors_(v)) {
            if (on_path_[w]) continue;
            on_path_[w] = true;
            path_.push_back(w);
            bool go_on = walk(w);
            path_.pop_back();
            on_path_[w] = false;
            if (!go_on) return false;
        }
        return true;
    }

    std::vector<bool> on_path_;
    Path path_;
    Vertex t_;
    Neighbors neighbors_;
    std::size_t cap_;
    std::size_t max_edges_;
    PathEnumeration result_;
};

template <class Neighbors>
PathEnumeration run_dfs(std::size_t n, Vertex s, Vertex t, Neighbors neighbors, std::size_t cap,
                        std::size_t max_edges = std::numeric_limits<std::size_t>::max()) {
    return PathDfs<Neighbors>(n, s, t, neighbors, cap, max_edges).run();
}

std::vector<std::uint32_t> to_masks(std::span<const std::vector<Vertex>> family,
                                    std::size_t universe) {
    std::vector<std::uint32_t> masks;
    masks.reserve(family.size());
    for (const auto& s : family) {
        std::uint32_t m = 0;
        for (Vertex v : s) {
            if (v >= universe) throw std::invalid_argument("family element outside universe");
            m |= std::uint32_t{1} << v;
        }
        masks.push_back(m);
    }
    return masks;
}

bool distinct_traces(const std::vector<std::uint32_t>& masks, std::uint32_t trackers,
                     std::vector<std::uint32_t>& scratch) {
    scratch.clear();
    for (auto m : masks) scratch.push_back(m & trackers);
    std::sort(scratch.begin(), scratch.end());
    return std::adjacent_find(scratch.begin(), scratch.end()) == scratch.end();
}

}  // namespace

PathEnumeration enumerate_all_paths(const Digraph& d, std::size_t cap) {
    if (d.is_singleton()) return {{Path{d.source()}}, false};
    // Only step onto vertices that can still reach t, so the search never
    // wanders into dead ends.
    std::vector<bool> reaches_t(d.vertex_count(), false);
    std::vector<Vertex> stack{d.sink()};
    reaches_t[d.sink()] = true;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : d.in_neighbors(v)) {
            if (!reaches_t[u]) {
                reaches_t[u] = true;
                stack.push_back(u);
            }
        }
    }
    auto useful_out = [&d, &reaches_t](Vertex v) {
        std::vector<Vertex> next;
        for (Vertex w : d.out_neighbors(v)) {
            if (reaches_t[w]) next.push_back(w);
        }
        return next;
    };
    return run_dfs(d.vertex_count(), d.source(), d.sink(), useful_out, cap);
}

PathEnumeration enumerate_simple_paths(const Graph& g, std::size_t cap) {
    return run_dfs(g.vertex_count(), g.source(), g.sink(),
                   [&g](Vertex v) { return g.neighbors(v); }, cap);
}

PathEnumeration enumerate_shortest_paths(const Graph& g, std::size_t cap) {
    // Bellman-Ford style relaxation over the edge list, unit weights.
    const std::size_t n = g.vertex_count();
    const std::size_t inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(n, inf);
    dist[g.source()] = 0;
    for (std::size_t round = 0; round + 1 < n; ++round) {
        bool changed = false;
        auto relax = [&](Vertex from, Vertex to) {
            if (dist[from] != inf && dist[from] + 1 < dist[to]) {
                dist[to] = dist[from] + 1;
                changed = true;
            }
        };
        for (const auto& e : g.edges()) {
            relax(e.u, e.v);
            relax(e.v, e.u);
        }
        if (!changed) break;
    }
    if (dist[g.sink()] == inf) return {};
    auto all = run_dfs(g.vertex_count(), g.source(), g.sink(),
                       [&g](Vertex v) { return g.neighbors(v); }, cap, dist[g.sink()]);
    return all;
}

bool tracks(std::span<const std::vector<Vertex>> family, std::span<const Vertex> trackers) {
    std::vector<Vertex> sorted_trackers(trackers.begin(), trackers.end());
    std::sort(sorted_trackers.begin(), sorted_trackers.end());
    std::vector<std::vector<Vertex>> traces;
    traces.reserve(family.size());
    for (const auto& s : family) {
        std::vector<Vertex> trace;
        for (Vertex v : s) {
            if (std::binary_search(sorted_trackers.begin(), sorted_trackers.end(), v)) {
                trace.push_back(v);
            }
        }
        std::sort(trace.begin(), trace.end());
        trace.erase(std::unique(trace.begin(), trace.end()), trace.end());
        traces.push_back(std::move(trace));
    }
    std::sort(traces.begin(), traces.end());
    return std::adjacent_find(traces.begin(), traces.end()) == traces.end();
}

std::optional<std::vector<Vertex>> brute_min_tracking_witness(
    std::span<const std::vector<Vertex>> family, std::size_t universe, std::size_t max_k) {
    if (universe > kMaxUniverse) {
        throw std::invalid_argument("oracle refuses universe of size " + std::to_string(universe) +
                                    " (limit " + std::to_string(kMaxUniverse) + ")");
    }
    const auto masks = to_masks(family, universe);
    const std::uint32_t full = universe == 0 ? 0 : (std::uint32_t{1} << universe) - 1;
    std::vector<std::uint32_t> scratch;
    for (std::size_t size = 0; size <= std::min(max_k, universe); ++size) {
        // All masks with `size` bits, increasing numeric order.
        for (std::uint32_t t = 0;; ++t) {
            if (static_cast<std::size_t>(std::popcount(t)) == size &&
                distinct_traces(masks, t, scratch)) {
                std::vector<Vertex> out;
                for (Vertex v = 0; v < universe; ++v) {
                    if (t >> v & 1U) out.push_back(v);
                }
                return out;
            }
            if (t == full) break;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> brute_min_tracking(std::span<const std::vector<Vertex>> family,
                                              std::size_t universe, std::size_t max_k) {
    auto witness = brute_min_tracking_witness(family, universe, max_k);
    if (!witness) return std::nullopt;
    return witness->size();
}

}  // namespace tracking::oracle
