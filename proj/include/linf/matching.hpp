#pragma once

#include <vector>

#include "linf/graph.hpp"

namespace linf {

// Maximum matching size via augmenting-path search.
int matching_number(const BipartiteGraph& bg);

// A vertex set of size matching_number(bg) meeting every edge, labeled per
// the to_graph convention (X as 1..nx, Y as nx+1..nx+ny), sorted.
std::vector<int> min_vertex_cover_bipartite(const BipartiteGraph& bg);

}  // namespace linf
