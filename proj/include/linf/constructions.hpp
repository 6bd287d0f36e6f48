#pragma once

#include "linf/graph.hpp"

namespace linf {

// H(n,k,m): clique on A = [m], C = [k-m] inside A, B = [n] \ A independent,
// and every B-C pair adjacent. Valid for ceil((k+1)/2) <= m <= k <= n.
Graph build_H(int n, int k, int m);

enum class UnrestrictedVariant { clique, dominating };

// The two extremal lower-bound families on [n], 1 <= k <= n-1.
//   clique:     K_k together with n-k isolated vertices.
//   dominating: odd k,  K_{(k-1)/2} joined to E_{n-(k-1)/2};
//               even k, K_{k/2-1} joined to (K_2 union E_{n-k/2-1}).
// Cliques sit on the lowest labels (the even-k K_2 right after the join
// clique), so the results are shifted graphs verbatim.
Graph build_extremal_unrestricted(int n, int k, UnrestrictedVariant variant);

// Bipartite towers with parts of size n.
//   odd k:  the first (k-1)/2 X-vertices joined to all of Y, rest isolated.
//   even k: the first k/2-1 X-vertices joined to all of Y, plus the first
//           Y-vertex joined to every remaining X-vertex.
// Requires 2n >= k+1 and n >= ceil((k-1)/2).
BipartiteGraph build_extremal_bipartite(int n, int k);

// G*: X1 = first x X-vertices complete to Y, Y1 = first kceil-x Y-vertices
// complete to X, nothing else. Requires 0 <= x <= kceil <= n.
BipartiteGraph build_gstar(int n, int kceil, int x);

}  // namespace linf
