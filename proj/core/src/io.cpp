#include "tracking/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace tracking::io {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream words(raw);
        Line line{number, {}};
        for (std::string w; words >> w;) line.tokens.push_back(std::move(w));
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

std::uint64_t to_number(const Line& line, const std::string& token, const char* what) {
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) {
        throw ParseError(line.number, std::string("expected ") + what + ", got '" + token + "'");
    }
    return value;
}

Vertex to_vertex(const Line& line, const std::string& token, std::uint64_t n) {
    auto v = to_number(line, token, "a vertex id");
    if (v >= n) {
        throw ParseError(line.number,
                         "vertex " + token + " out of range for n = " + std::to_string(n));
    }
    return static_cast<Vertex>(v);
}

constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 31;

std::uint64_t to_count(const Line& line, const std::string& token) {
    auto n = to_number(line, token, "a count");
    if (n > kMaxVertices) throw ParseError(line.number, "count " + token + " too large");
    return n;
}

// First arc, in file order, that closes a directed cycle.
std::size_t closing_arc(std::size_t n, const std::vector<Edge>& arcs) {
    std::vector<std::vector<Vertex>> out(n);
    std::vector<char> seen(n);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const auto [u, v] = arcs[i];
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<Vertex> stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            if (x == u) return i;
            for (Vertex y : out[x]) {
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        out[u].push_back(v);
    }
    return arcs.size();
}

Instance parse_graph_like(const std::vector<Line>& lines, bool directed) {
    const Line& head = lines.front();
    if (head.tokens.size() != 4) {
        throw ParseError(head.number, "header must be '" + head.tokens[0] + " n s t'");
    }
    const std::uint64_t n = to_count(head, head.tokens[1]);
    if (n == 0) throw ParseError(head.number, "a graph needs at least one vertex");
    const Vertex s = to_vertex(head, head.tokens[2], n);
    const Vertex t = to_vertex(head, head.tokens[3], n);
    const bool singleton = directed && n == 1 && s == t && lines.size() == 1;
    if (s == t && !singleton) throw ParseError(head.number, "source and destination coincide");

    std::vector<Edge> edges;
    std::vector<std::size_t> line_of;
    std::map<Edge, std::size_t> first_seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != 2) {
            throw ParseError(line.number, directed ? "expected an arc 'u v'" : "expected an edge 'u v'");
        }
        Vertex u = to_vertex(line, line.tokens[0], n);
        Vertex v = to_vertex(line, line.tokens[1], n);
        if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
        Edge key = directed || u < v ? Edge{u, v} : Edge{v, u};
        auto [it, fresh] = first_seen.emplace(key, line.number);
        if (!fresh) {
            throw ParseError(line.number, std::string(directed ? "duplicate arc" : "duplicate edge") +
                                              " (first on line " + std::to_string(it->second) + ")");
        }
        edges.push_back({u, v});
        line_of.push_back(line.number);
    }

    if (!directed) return Graph(n, std::move(edges), s, t);
    if (auto i = closing_arc(n, edges); i < edges.size()) {
        throw ParseError(line_of[i], "arc closes a directed cycle");
    }
    return Digraph(n, std::move(edges), s, t);
}

Instance parse_set_system(const std::vector<Line>& lines) {
    const Line& head = lines.front();
    if (head.tokens.size() != 3) throw ParseError(head.number, "header must be 'setsystem n m'");
    const std::uint64_t n = to_count(head, head.tokens[1]);
    const std::uint64_t m = to_count(head, head.tokens[2]);
    if (lines.size() - 1 < m) {
        throw ParseError(lines.back().number, "expected " + std::to_string(m) + " sets, found " +
                                                  std::to_string(lines.size() - 1));
    }
    if (lines.size() - 1 > m) throw ParseError(lines[m + 1].number, "more sets than declared");

    std::vector<ElementSet> family;
    std::map<ElementSet, std::size_t> first_seen;
    for (std::size_t i = 1; i <= m; ++i) {
        const Line& line = lines[i];
        ElementSet set;
        if (!(line.tokens.size() == 1 && line.tokens[0] == "-")) {
            for (const auto& tok : line.tokens) set.push_back(to_vertex(line, tok, n));
        }
        std::sort(set.begin(), set.end());
        if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
            throw ParseError(line.number, "element repeated within a set");
        }
        auto [it, fresh] = first_seen.emplace(set, line.number);
        if (!fresh) {
            throw ParseError(line.number,
                             "set repeats the set on line " + std::to_string(it->second));
        }
        family.push_back(std::move(set));
    }
    return SetSystem(n, std::move(family));
}

void write_edges(std::ostringstream& out, const std::vector<Edge>& edges) {
    for (const auto& e : edges) out << e.u << ' ' << e.v << '\n';
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("parse error line " + std::to_string(line) + ": " + message),
      line_(line) {}

InstanceKind kind_of(const Instance& instance) {
    return static_cast<InstanceKind>(instance.index());
}

const char* to_string(InstanceKind kind) {
    switch (kind) {
        case InstanceKind::graph: return "graph";
        case InstanceKind::dag: return "dag";
        case InstanceKind::setsystem: return "setsystem";
    }
    return "graph";
}

Instance parse_instance(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty()) throw ParseError(1, "empty input");
    const std::string& kind = lines.front().tokens.front();
    try {
        if (kind == "graph") return parse_graph_like(lines, false);
        if (kind == "dag") return parse_graph_like(lines, true);
        if (kind == "setsystem") return parse_set_system(lines);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines.front().number, e.what());
    }
    throw ParseError(lines.front().number,
                     "unknown instance kind '" + kind + "' (graph, dag or setsystem)");
}

Instance parse_instance(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

Instance read_instance_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return parse_instance(in);
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.vertex_count() << ' ' << g.source() << ' ' << g.sink() << '\n';
    write_edges(out, g.edges());
    return out.str();
}

std::string write_dag(const Digraph& d) {
    std::ostringstream out;
    out << "dag " << d.vertex_count() << ' ' << d.source() << ' ' << d.sink() << '\n';
    write_edges(out, d.arcs());
    return out.str();
}

std::string write_set_system(const SetSystem& sys) {
    std::ostringstream out;
    out << "setsystem " << sys.universe_size() << ' ' << sys.set_count() << '\n';
    for (const auto& set : sys.family()) {
        if (set.empty()) {
            out << "-\n";
            continue;
        }
        for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << set[i];
        out << '\n';
    }
    return out.str();
}

std::string write_instance(const Instance& instance) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Graph>) return write_graph(x);
            else if constexpr (std::is_same_v<T, Digraph>) return write_dag(x);
            else return write_set_system(x);
        },
        instance);
}

}  // namespace tracking::io
