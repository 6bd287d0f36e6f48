#pragma once

#include <utility>

#include "linf/graph.hpp"

namespace linf {

struct ShiftStep {
    int i = 0, j = 0;
    int changed = 0;  // edges rewritten by this step
};

// Kelmans shift S_ij: every edge e with j in e, i not in e and
// (e - {j}) + {i} absent in g is replaced by (e - {j}) + {i}; everything
// else is kept. Edge count is preserved. Requires 1 <= i < j <= n.
std::pair<Graph, ShiftStep> shift(const Graph& g, int i, int j);

// Fixpoint of all S_ij with i < j. Tested through the equivalent down-set
// characterization: for every edge {u,v} and every u' < u with u' != v,
// {u',v} is also an edge.
bool is_shifted(const Graph& g);

// Sweeps (i,j) in lexicographic order, restarting after any change, until a
// whole sweep changes nothing. Terminates since every rewrite strictly
// lowers the total label sum over edges.
Graph shift_closure(const Graph& g);

}  // namespace linf
