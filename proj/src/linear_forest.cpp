#include "linf/linear_forest.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace linf {

bool is_linear_forest(const Graph& g) {
    int n = g.vertex_count();
    for (int v = 1; v <= n; ++v) {
        if (g.degree(v) > 2) return false;
    }
    // acyclic check: a forest has exactly n - #components edges
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int components = 0;
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        if (comp[static_cast<std::size_t>(v)] != -1) continue;
        ++components;
        comp[static_cast<std::size_t>(v)] = components;
        stack.push_back(v);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            std::uint64_t r = g.row(u + 1);
            while (r) {
                int w = std::countr_zero(r);
                r &= r - 1;
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = components;
                    stack.push_back(w);
                }
            }
        }
    }
    return g.edge_count() == n - components;
}

namespace {

void check_cap(const Graph& g, int cap) {
    if (g.vertex_count() > cap) {
        throw CapExceededError("instance too large for exact oracle: n = " +
                               std::to_string(g.vertex_count()) + " > cap " + std::to_string(cap));
    }
}

// endpoint_masks[T] = set of v in T such that the induced subgraph on T has a
// Hamiltonian path ending at v; pieces[T] = minimum number of such path
// subsets partitioning T.
struct Scratch {
    std::vector<std::uint32_t> endpoints;
    std::vector<std::uint8_t> pieces;
};

Scratch& scratch() {
    thread_local Scratch s;
    return s;
}

// Fills scratch tables for g; returns the full-set mask.
std::uint32_t run_dp(const Graph& g) {
    int n = g.vertex_count();
    std::uint32_t full = n == 0 ? 0 : (n == 32 ? ~0u : (1u << n) - 1);
    auto& s = scratch();
    std::size_t size = static_cast<std::size_t>(full) + 1;
    if (s.endpoints.size() < size) {
        s.endpoints.resize(size);
        s.pieces.resize(size);
    }

    std::uint32_t rows[kMaxVertices];
    for (int v = 0; v < n; ++v) rows[v] = static_cast<std::uint32_t>(g.row(v + 1));

    s.endpoints[0] = 0;
    for (std::uint32_t set = 1; set <= full && full; ++set) {
        std::uint32_t endp = 0;
        if ((set & (set - 1)) == 0) {
            endp = set;
        } else {
            std::uint32_t rest = set;
            while (rest) {
                std::uint32_t vbit = rest & (0u - rest);
                rest &= rest - 1;
                int v = std::countr_zero(vbit);
                if (s.endpoints[set ^ vbit] & rows[v]) endp |= vbit;
            }
        }
        s.endpoints[set] = endp;
        if (set == full) break;
    }

    s.pieces[0] = 0;
    for (std::uint32_t set = 1; set <= full && full; ++set) {
        std::uint32_t low = set & (0u - set);
        std::uint32_t rest = set ^ low;
        std::uint8_t best = 0xFF;
        // submasks of `set` containing its lowest vertex
        std::uint32_t sub = rest;
        for (;;) {
            std::uint32_t piece = sub | low;
            if (s.endpoints[piece]) {
                std::uint8_t cand = static_cast<std::uint8_t>(s.pieces[set ^ piece] + 1);
                if (cand < best) best = cand;
            }
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
        s.pieces[set] = best;
        if (set == full) break;
    }
    return full;
}

// Walks one Hamiltonian path of the piece, lowest-label endpoint first,
// appending its edges (1-based, sorted pairs).
void extract_path(const Graph& g, std::uint32_t piece,
                  std::vector<std::pair<int, int>>& edges) {
    auto& s = scratch();
    std::uint32_t remaining = piece;
    std::uint32_t cur_bit = s.endpoints[piece] & (0u - s.endpoints[piece]);
    while (std::popcount(remaining) > 1) {
        int v = std::countr_zero(cur_bit);
        std::uint32_t next_set = remaining ^ cur_bit;
        std::uint32_t options =
            s.endpoints[next_set] & static_cast<std::uint32_t>(g.row(v + 1));
        std::uint32_t next_bit = options & (0u - options);
        int u = std::countr_zero(next_bit);
        edges.emplace_back(std::min(u, v) + 1, std::max(u, v) + 1);
        remaining = next_set;
        cur_bit = next_bit;
    }
}

}  // namespace

int linear_forest_max_edges(const Graph& g, int cap) {
    check_cap(g, cap);
    int n = g.vertex_count();
    if (n == 0) return 0;
    std::uint32_t full = run_dp(g);
    return n - scratch().pieces[full];
}

LinearForestStats max_linear_forest(const Graph& g, int cap) {
    check_cap(g, cap);
    LinearForestStats out;
    int n = g.vertex_count();
    if (n == 0) return out;

    std::uint32_t full = run_dp(g);
    auto& s = scratch();
    out.lf = n - s.pieces[full];

    std::uint32_t todo = full;
    while (todo) {
        std::uint32_t low = todo & (0u - todo);
        std::uint32_t rest = todo ^ low;
        std::uint32_t chosen = 0;
        // first valid piece in descending submask order (largest first)
        for (std::uint32_t sub = rest;;) {
            std::uint32_t piece = sub | low;
            if (s.endpoints[piece] && s.pieces[todo ^ piece] + 1 == s.pieces[todo]) {
                chosen = piece;
                break;
            }
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
        extract_path(g, chosen, out.witness);
        todo ^= chosen;
    }
    return out;
}

bool is_lnk_free(const Graph& g, int k, int cap) {
    if (k < 1) throw std::invalid_argument("is_lnk_free: k must be at least 1");
    return linear_forest_max_edges(g, cap) <= k - 1;
}

}  // namespace linf
