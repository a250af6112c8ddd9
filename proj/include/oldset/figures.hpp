#pragma once

#include <string>
#include <vector>

namespace oldset {

/// Writes the catalog DOT files: the four connected locatable digraphs of
/// order at most 2, the two order-3 pendant digraphs, the three-panel
/// worked construction (forcing arcs / auxiliary forest / final digraph),
/// and the full order <= 4 tree catalog.  Forcing arcs are dashed and
/// domination-forced vertices are boxes.  Returns the paths written.
std::vector<std::string> write_figures(const std::string& directory);

}  // namespace oldset
