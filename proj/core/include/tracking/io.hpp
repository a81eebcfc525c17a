#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "tracking/graph.hpp"
#include "tracking/set_system.hpp"

// Plain-text instance formats, 0-based ids, '#' starts a comment:
//
//   graph n s t          dag n s t            setsystem n m
//   u v                  u v                  <ids of set 0>
//   ...                  ...                  ...   ('-' for an empty set)
namespace tracking::io {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

using Instance = std::variant<Graph, Digraph, SetSystem>;

enum class InstanceKind { graph, dag, setsystem };

InstanceKind kind_of(const Instance& instance);
const char* to_string(InstanceKind kind);

// Throws ParseError; structural violations (duplicate edges, self-loops,
// repeated sets, directed cycles) are parse errors too.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);
Instance read_instance_file(const std::filesystem::path& path);

std::string write_graph(const Graph& g);
std::string write_dag(const Digraph& d);
std::string write_set_system(const SetSystem& sys);
std::string write_instance(const Instance& instance);

}  // namespace tracking::io
