#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tracking {

using Vertex = std::uint32_t;
using Path = std::vector<Vertex>;

struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected s-t graph. Edges are stored normalized (u < v) and
// sorted; adjacency lists are sorted ascending.
//
// Throws std::invalid_argument on self-loops, duplicate edges, endpoints out
// of range, or s == t.
class Graph {
public:
    Graph(std::size_t n, std::vector<Edge> edges, Vertex s, Vertex t);

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    Vertex source() const { return s_; }
    Vertex sink() const { return t_; }

    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
    bool has_edge(Vertex u, Vertex v) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    Vertex s_;
    Vertex t_;
};

// Simple directed s-t graph with in/out adjacency, sorted ascending.
//
// Acyclicity is not enforced at construction; topological_order() decides it
// and every DAG algorithm rejects cyclic input. The one allowed case with
// s == t is the trivial singleton (n == 1, no arcs), which is what the DAG
// reduction rules produce when every path collapses into one vertex.
class Digraph {
public:
    Digraph(std::size_t n, std::vector<Edge> arcs, Vertex s, Vertex t);

    std::size_t vertex_count() const { return out_.size(); }
    std::size_t arc_count() const { return arcs_.size(); }
    Vertex source() const { return s_; }
    Vertex sink() const { return t_; }
    bool is_singleton() const { return out_.size() == 1; }

    const std::vector<Edge>& arcs() const { return arcs_; }
    std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
    std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
    std::size_t out_degree(Vertex v) const { return out_[v].size(); }
    std::size_t in_degree(Vertex v) const { return in_[v].size(); }
    std::size_t degree(Vertex v) const { return out_[v].size() + in_[v].size(); }
    bool has_arc(Vertex u, Vertex v) const;

private:
    std::vector<Edge> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    Vertex s_;
    Vertex t_;
};

// Maps vertex ids of a reduced instance back to the instance it came from.
class VertexRelabeling {
public:
    VertexRelabeling() = default;
    explicit VertexRelabeling(std::vector<Vertex> to_original);

    static VertexRelabeling identity(std::size_t n);

    std::size_t size() const { return to_original_.size(); }
    Vertex original(Vertex reduced) const { return to_original_.at(reduced); }
    const std::vector<Vertex>& table() const { return to_original_; }

    // (this ∘ inner): inner maps a further-reduced instance into ours.
    VertexRelabeling compose(const VertexRelabeling& inner) const;

    // Maps a sorted set of reduced ids to a sorted set of original ids.
    std::vector<Vertex> map(std::span<const Vertex> reduced) const;

    // Maps a vertex sequence (e.g. a path) element by element, keeping order.
    Path map_sequence(std::span<const Vertex> reduced) const;

    friend bool operator==(const VertexRelabeling&, const VertexRelabeling&) = default;

private:
    std::vector<Vertex> to_original_;
};

// A set of trackers (vertex or element ids), kept sorted and unique.
class TrackerSet {
public:
    TrackerSet() = default;
    explicit TrackerSet(std::vector<Vertex> members);

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;
    const std::vector<Vertex>& members() const { return members_; }

    friend bool operator==(const TrackerSet&, const TrackerSet&) = default;

private:
    std::vector<Vertex> members_;
};

using Distances = std::vector<std::optional<std::uint32_t>>;

Distances bfs_distances(const Graph& g, Vertex from);

// Levels L(v) = dist(s, v).
Distances level_of(const Graph& g);

// Kahn's algorithm with smallest-id-first tie breaking, so the order is
// deterministic. Returns std::nullopt when the digraph has a cycle.
std::optional<std::vector<Vertex>> topological_order(const Digraph& d);

bool is_acyclic(const Digraph& d);

}  // namespace tracking
