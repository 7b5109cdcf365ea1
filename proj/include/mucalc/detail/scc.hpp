#pragma once

#include <vector>

namespace mucalc::detail {

/// Tarjan's algorithm, iterative. Components are returned in reverse
/// topological order; vertex order inside a component follows discovery.
std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& adjacency);

}  // namespace mucalc::detail
