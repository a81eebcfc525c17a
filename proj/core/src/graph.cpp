#include "tracking/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

namespace tracking {

namespace {

void check_endpoint(Vertex v, std::size_t n, const char* what) {
    if (v >= n) {
        throw std::invalid_argument(std::string(what) + " " + std::to_string(v) +
                                    " out of range for n = " + std::to_string(n));
    }
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges, Vertex s, Vertex t)
    : adjacency_(n), s_(s), t_(t) {
    check_endpoint(s, n, "source");
    check_endpoint(t, n, "destination");
    if (s == t) throw std::invalid_argument("source and destination coincide");

    for (auto& e : edges) {
        check_endpoint(e.u, n, "edge endpoint");
        check_endpoint(e.v, n, "edge endpoint");
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
        throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + " " +
                                    std::to_string(dup->v));
    }
    for (const auto& e : edges) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
    edges_ = std::move(edges);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

Digraph::Digraph(std::size_t n, std::vector<Edge> arcs, Vertex s, Vertex t)
    : out_(n), in_(n), s_(s), t_(t) {
    check_endpoint(s, n, "source");
    check_endpoint(t, n, "destination");
    if (s == t && !(n == 1 && arcs.empty())) {
        throw std::invalid_argument("source and destination coincide");
    }
    for (const auto& a : arcs) {
        check_endpoint(a.u, n, "arc endpoint");
        check_endpoint(a.v, n, "arc endpoint");
        if (a.u == a.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(a.u));
    }
    std::sort(arcs.begin(), arcs.end());
    if (auto dup = std::adjacent_find(arcs.begin(), arcs.end()); dup != arcs.end()) {
        throw std::invalid_argument("duplicate arc " + std::to_string(dup->u) + " " +
                                    std::to_string(dup->v));
    }
    for (const auto& a : arcs) {
        out_[a.u].push_back(a.v);
        in_[a.v].push_back(a.u);
    }
    for (auto& adj : in_) std::sort(adj.begin(), adj.end());
    arcs_ = std::move(arcs);
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
    const auto& adj = out_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

VertexRelabeling::VertexRelabeling(std::vector<Vertex> to_original)
    : to_original_(std::move(to_original)) {
    auto sorted = to_original_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("vertex relabeling is not injective");
    }
}

VertexRelabeling VertexRelabeling::identity(std::size_t n) {
    std::vector<Vertex> table(n);
    for (std::size_t i = 0; i < n; ++i) table[i] = static_cast<Vertex>(i);
    return VertexRelabeling(std::move(table));
}

VertexRelabeling VertexRelabeling::compose(const VertexRelabeling& inner) const {
    std::vector<Vertex> table;
    table.reserve(inner.size());
    for (Vertex v : inner.table()) table.push_back(original(v));
    return VertexRelabeling(std::move(table));
}

std::vector<Vertex> VertexRelabeling::map(std::span<const Vertex> reduced) const {
    std::vector<Vertex> out;
    out.reserve(reduced.size());
    for (Vertex v : reduced) out.push_back(original(v));
    std::sort(out.begin(), out.end());
    return out;
}

Path VertexRelabeling::map_sequence(std::span<const Vertex> reduced) const {
    Path out;
    out.reserve(reduced.size());
    for (Vertex v : reduced) out.push_back(original(v));
    return out;
}

TrackerSet::TrackerSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool TrackerSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

Distances bfs_distances(const Graph& g, Vertex from) {
    if (from >= g.vertex_count()) throw std::out_of_range("bfs start vertex out of range");
    Distances dist(g.vertex_count());
    std::queue<Vertex> frontier;
    dist[from] = 0;
    frontier.push(from);
    while (!frontier.empty()) {
        Vertex u = frontier.front();
        frontier.pop();
        for (Vertex w : g.neighbors(u)) {
            if (!dist[w]) {
                dist[w] = *dist[u] + 1;
                frontier.push(w);
            }
        }
    }
    return dist;
}

Distances level_of(const Graph& g) { return bfs_distances(g, g.source()); }

std::optional<std::vector<Vertex>> topological_order(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    std::vector<std::size_t> pending(n);
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v) {
        pending[v] = d.in_degree(v);
        if (pending[v] == 0) ready.push(v);
    }
    std::vector<Vertex> order;
    order.reserve(n);
    while (!ready.empty()) {
        Vertex u = ready.top();
        ready.pop();
        order.push_back(u);
        for (Vertex w : d.out_neighbors(u)) {
            if (--pending[w] == 0) ready.push(w);
        }
    }
    if (order.size() != n) return std::nullopt;
    return order;
}

bool is_acyclic(const Digraph& d) { return topological_order(d).has_value(); }

}  // namespace tracking
