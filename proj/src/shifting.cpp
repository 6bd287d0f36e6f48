#include "linf/shifting.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace linf {

std::pair<Graph, ShiftStep> shift(const Graph& g, int i, int j) {
    int n = g.vertex_count();
    if (i < 1 || j > n || i >= j) {
        throw std::invalid_argument("shift: need 1 <= i < j <= n, got i=" + std::to_string(i) +
                                    " j=" + std::to_string(j));
    }
    // x qualifies iff {j,x} is an edge, {i,x} is not, and x != i
    // ({i,j} itself contains i and stays put).
    std::uint64_t movable = g.row(j) & ~g.row(i) & ~(1ull << (i - 1));
    Graph out = g;
    ShiftStep step{i, j, std::popcount(movable)};
    while (movable) {
        int x = std::countr_zero(movable) + 1;
        movable &= movable - 1;
        out.remove_edge(j, x);
        out.add_edge(i, x);
    }
    return {out, step};
}

bool is_shifted(const Graph& g) {
    int n = g.vertex_count();
    for (int v = 1; v <= n; ++v) {
        std::uint64_t r = g.row(v);
        if (!r) continue;
        int hi = 63 - std::countl_zero(r);
        std::uint64_t prefix = (hi == 63 ? ~0ull : (1ull << (hi + 1)) - 1) & ~(1ull << (v - 1));
        if (r != prefix) return false;
    }
    return true;
}

Graph shift_closure(const Graph& g) {
    Graph cur = g;
    int n = cur.vertex_count();
    for (;;) {
        bool changed = false;
        for (int i = 1; i <= n && !changed; ++i) {
            for (int j = i + 1; j <= n && !changed; ++j) {
                auto [next, step] = shift(cur, i, j);
                if (step.changed > 0) {
                    cur = std::move(next);
                    changed = true;
                }
            }
        }
        if (!changed) return cur;
    }
}

}  // namespace linf
