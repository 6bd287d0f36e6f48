#pragma once

#include <cstdint>
#include <string>

#include "linf/bigint.hpp"
#include "linf/graph.hpp"

namespace linf {

enum class PatternKind { clique, clique_star, biclique };

struct PatternSpec {
    PatternKind kind = PatternKind::clique;
    int s = 1;
    int t = 0;  // unused for clique

    static PatternSpec clique(int s) { return {PatternKind::clique, s, 0}; }
    static PatternSpec clique_star(int s, int t) { return {PatternKind::clique_star, s, t}; }
    static PatternSpec biclique(int s, int t) { return {PatternKind::biclique, s, t}; }

    std::string name() const;  // K_s / K*_{s,t} / K_{s,t}

    bool operator==(const PatternSpec& o) const {
        return kind == o.kind && s == o.s && t == o.t;
    }
};

// Number of s-subsets of V inducing a complete subgraph; 0 when s > n.
Count count_cliques(const Graph& g, int s);

// Ordered pairs (W1, W2) of disjoint vertex sets with |W1| = s inducing a
// clique and |W2| = t fully adjacent to W1. Edges inside W2 are irrelevant.
Count count_clique_stars(const Graph& g, int s, int t);

// Pairs (S, T), S in X with |S| = s, T in Y with |T| = t, all S-T pairs
// adjacent.
Count count_bicliques_one_sided(const BipartiteGraph& bg, int s, int t);

// Copies of K_{s,t} in an equal-part host: one orientation when s = t, the
// sum of both orientations otherwise.
Count count_bicliques(const BipartiteGraph& bg, int s, int t);

// uint64 fast paths; safe at oracle scale (small n), used by the searches.
std::uint64_t count_cliques_u64(const Graph& g, int s);
std::uint64_t count_clique_stars_u64(const Graph& g, int s, int t);
std::uint64_t count_bicliques_u64(const BipartiteGraph& bg, int s, int t);

}  // namespace linf
