#pragma once

#include <utility>
#include <vector>

#include "linf/graph.hpp"

namespace linf {

// All acceptance sweeps stay at n <= 10; the O(3^n) oracle is exact and
// refuses anything past this cap rather than approximating.
inline constexpr int kDefaultExactCap = 16;

// True iff every component is a path or an isolated vertex.
bool is_linear_forest(const Graph& g);

struct LinearForestStats {
    int lf = 0;                                // max edges over linear-forest subgraphs
    std::vector<std::pair<int, int>> witness;  // a linear forest attaining lf
};

// Exact subset DP: for every vertex set, whether it carries a Hamiltonian
// path of the induced subgraph, then a minimum path-piece cover of [n];
// lf = n - min pieces.
LinearForestStats max_linear_forest(const Graph& g, int cap = kDefaultExactCap);
int linear_forest_max_edges(const Graph& g, int cap = kDefaultExactCap);

// g is L_{n,k}-free iff it has no linear-forest subgraph with k edges,
// i.e. linear_forest_max_edges(g) <= k-1. Requires k >= 1.
bool is_lnk_free(const Graph& g, int k, int cap = kDefaultExactCap);

}  // namespace linf
