#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oldset/digraph.hpp"

namespace oldset {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
    int line;
};

/// Edge-list text format: first non-empty line is the vertex count n, every
/// following non-empty line is "u v" for the arc u->v (0-indexed, "u u" is a
/// loop).  '#' starts a comment.  Duplicate arcs are an error.
Digraph parse_edge_list(std::string_view text);

Digraph read_edge_list_file(const std::string& path);

/// Inverse of parse_edge_list up to comments/whitespace; arcs sorted.
std::string emit_edge_list(const Digraph& d);

/// One-line rendering used in reports: "n: u>v u>v ...".
std::string compact_edge_list(const Digraph& d);

/// Optional styling for DOT export: forcing arcs are dashed, domination-forced
/// vertices are boxes.
struct DotAnnotations {
    std::vector<Arc> forcing_arcs;
    VertexSet domination_forced;
};

std::string to_dot(const Digraph& d, const DotAnnotations* annotations = nullptr,
                   std::string_view name = "D");

}  // namespace oldset
