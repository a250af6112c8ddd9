#include "oldset/edge_list.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace oldset {

namespace {

std::string strip(std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    const auto end = line.find_last_not_of(" \t\r");
    return std::string(line.substr(begin, end - begin + 1));
}

}  // namespace

Digraph parse_edge_list(std::string_view text) {
    std::istringstream input{std::string(text)};
    std::string raw;
    int lineno = 0;
    std::optional<Digraph> d;
    while (std::getline(input, raw)) {
        ++lineno;
        const std::string line = strip(raw);
        if (line.empty()) continue;
        std::istringstream fields(line);
        if (!d) {
            int n;
            std::string extra;
            if (!(fields >> n) || (fields >> extra))
                throw ParseError(lineno, "expected the vertex count");
            if (n < 1) throw ParseError(lineno, "vertex count must be positive");
            if (n > VertexSet::max_universe)
                throw ParseError(lineno, "vertex count exceeds the supported maximum of 64");
            d.emplace(n);
            continue;
        }
        int u, v;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra))
            throw ParseError(lineno, "expected an arc as \"u v\"");
        if (u < 0 || u >= d->order() || v < 0 || v >= d->order())
            throw ParseError(lineno, "vertex out of range 0.." + std::to_string(d->order() - 1));
        if (d->has_arc(u, v))
            throw ParseError(lineno,
                             "duplicate arc " + std::to_string(u) + " -> " + std::to_string(v));
        d->add_arc(u, v);
    }
    if (!d) throw ParseError(lineno, "empty input, expected the vertex count");
    return *d;
}

Digraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

std::string emit_edge_list(const Digraph& d) {
    std::string out = std::to_string(d.order()) + "\n";
    for (const auto& [u, v] : d.arcs())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string compact_edge_list(const Digraph& d) {
    std::string out = std::to_string(d.order()) + ":";
    for (const auto& [u, v] : d.arcs())
        out += " " + std::to_string(u) + ">" + std::to_string(v);
    return out;
}

std::string to_dot(const Digraph& d, const DotAnnotations* annotations, std::string_view name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < d.order(); ++v) {
        out << "  " << v;
        if (annotations && annotations->domination_forced.universe() == d.order() &&
            annotations->domination_forced.contains(v))
            out << " [shape=box]";
        out << ";\n";
    }
    for (const auto& arc : d.arcs()) {
        out << "  " << arc.first << " -> " << arc.second;
        if (annotations &&
            std::find(annotations->forcing_arcs.begin(), annotations->forcing_arcs.end(), arc) !=
                annotations->forcing_arcs.end())
            out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace oldset
