#include "tracking/generate.hpp"

#include <limits>
#include <set>
#include <stdexcept>

#include "tracking/dag.hpp"

namespace tracking::gen {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Graph random_connected_graph(Rng& rng, std::size_t n, double extra_edge_prob) {
    if (n < 2) throw std::invalid_argument("random_connected_graph needs n >= 2");
    std::set<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        Vertex u = static_cast<Vertex>(rng.below(v));
        edges.insert({u, v});
    }
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!edges.contains({u, v}) && rng.chance(extra_edge_prob)) edges.insert({u, v});
        }
    }
    Vertex s = static_cast<Vertex>(rng.below(n));
    Vertex t = static_cast<Vertex>(rng.below(n - 1));
    if (t >= s) ++t;
    return Graph(n, {edges.begin(), edges.end()}, s, t);
}

Digraph random_dag(Rng& rng, std::size_t n, double arc_prob) {
    if (n < 2) throw std::invalid_argument("random_dag needs n >= 2");
    std::vector<Edge> arcs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.chance(arc_prob)) arcs.push_back({u, v});
        }
    }
    return Digraph(n, std::move(arcs), 0, static_cast<Vertex>(n - 1));
}

Digraph random_st_dag(Rng& rng, std::size_t n, double extra_arc_prob) {
    if (n < 2) throw std::invalid_argument("random_st_dag needs n >= 2");
    std::set<Edge> arcs;
    const Vertex t = static_cast<Vertex>(n - 1);
    for (Vertex v = 1; v < t; ++v) {
        arcs.insert({static_cast<Vertex>(rng.below(v)), v});
        arcs.insert({v, static_cast<Vertex>(rng.between(v + 1, t))});
    }
    if (n == 2) arcs.insert({0, 1});
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.chance(extra_arc_prob)) arcs.insert({u, v});
        }
    }
    return Digraph(n, {arcs.begin(), arcs.end()}, 0, t);
}

Digraph random_reduced_dag(Rng& rng, std::size_t raw_n, double extra_arc_prob) {
    for (;;) {
        auto reduced = reduce_dag(random_st_dag(rng, raw_n, extra_arc_prob));
        if (reduced.shape == DagShape::reduced) return std::move(reduced.base);
    }
}

Graph random_layered_graph(Rng& rng, std::size_t levels, std::size_t width, double edge_prob) {
    if (width == 0) throw std::invalid_argument("random_layered_graph needs width >= 1");
    std::vector<std::vector<Vertex>> layer{{0}};
    Vertex next = 1;
    for (std::size_t i = 0; i < levels; ++i) {
        std::size_t size = rng.between(1, width);
        layer.emplace_back();
        for (std::size_t j = 0; j < size; ++j) layer.back().push_back(next++);
    }
    layer.push_back({next++});

    std::set<Edge> edges;
    auto join = [&](Vertex a, Vertex b) { edges.insert({std::min(a, b), std::max(a, b)}); };
    for (std::size_t i = 0; i + 1 < layer.size(); ++i) {
        const auto& lo = layer[i];
        const auto& hi = layer[i + 1];
        for (Vertex b : hi) join(lo[rng.below(lo.size())], b);
        for (Vertex a : lo) join(a, hi[rng.below(hi.size())]);
        for (Vertex a : lo) {
            for (Vertex b : hi) {
                if (rng.chance(edge_prob)) join(a, b);
            }
        }
    }
    return Graph(next, {edges.begin(), edges.end()}, 0, next - 1);
}

SetSystem random_set_system(Rng& rng, std::size_t universe, std::size_t m, double density) {
    if (universe < 63 && m > (std::size_t{1} << universe)) {
        throw std::invalid_argument("more sets requested than subsets exist");
    }
    std::set<ElementSet> seen;
    std::vector<ElementSet> family;
    while (family.size() < m) {
        ElementSet s;
        for (Element x = 0; x < universe; ++x) {
            if (rng.chance(density)) s.push_back(x);
        }
        if (seen.insert(s).second) family.push_back(std::move(s));
    }
    return SetSystem(universe, std::move(family));
}

namespace {

std::vector<Edge> diamond_chain(std::size_t c) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < c; ++i) {
        Vertex a = static_cast<Vertex>(3 * i);
        edges.push_back({a, a + 1});
        edges.push_back({a, a + 2});
        edges.push_back({a + 1, a + 3});
        edges.push_back({a + 2, a + 3});
    }
    return edges;
}

}  // namespace

Graph serial_diamonds(std::size_t c) {
    if (c == 0) throw std::invalid_argument("serial_diamonds needs c >= 1");
    return Graph(3 * c + 1, diamond_chain(c), 0, static_cast<Vertex>(3 * c));
}

Digraph serial_diamonds_dag(std::size_t c) {
    if (c == 0) throw std::invalid_argument("serial_diamonds_dag needs c >= 1");
    return Digraph(3 * c + 1, diamond_chain(c), 0, static_cast<Vertex>(3 * c));
}

Graph diameter_two(std::size_t r) {
    if (r == 0) throw std::invalid_argument("diameter_two needs r >= 1");
    std::vector<Edge> edges;
    const Vertex t = static_cast<Vertex>(r + 1);
    for (Vertex m = 1; m <= r; ++m) {
        edges.push_back({0, m});
        edges.push_back({m, t});
    }
    return Graph(r + 2, std::move(edges), 0, t);
}

Digraph ladder_dag(std::size_t r) {
    if (r == 0) throw std::invalid_argument("ladder_dag needs r >= 1");
    const Vertex t = static_cast<Vertex>(r + 1);
    Vertex next = t + 1;
    std::vector<Edge> arcs;
    auto subdivided = [&](Vertex u, Vertex v) {
        arcs.push_back({u, next});
        arcs.push_back({next, v});
        ++next;
    };
    for (Vertex i = 0; i < r; ++i) subdivided(i, i + 1);
    for (Vertex i = 0; i <= r; ++i) subdivided(i, t);
    arcs.push_back({static_cast<Vertex>(r), t});
    return Digraph(next, std::move(arcs), 0, t);
}

}  // namespace tracking::gen
