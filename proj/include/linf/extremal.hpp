#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linf/bigint.hpp"
#include "linf/counting.hpp"
#include "linf/graph.hpp"

namespace linf {

enum class SearchMode { full, shifted_only };
enum class HostKind { unrestricted, bipartite };

std::string mode_name(SearchMode mode);
std::optional<SearchMode> mode_from_name(std::string_view name);
std::string host_name(HostKind host);
std::optional<HostKind> host_from_name(std::string_view name);

struct SearchOptions {
    int threads = 0;       // 0: LINF_THREADS env, then hardware concurrency
    int full_cap = 7;      // max n in full mode
    int shifted_cap = 10;  // max n in shifted-only mode
    int bipartite_cap = 5; // max part size for bipartite hosts
    int split_depth = 10;  // edge-slot decisions fixed per parallel subtree task
};

// One verification row: a parameter tuple, the closed-form value, the
// brute-force maximum, and a g6 witness attaining it.
struct ExtremalRecord {
    std::string theorem;
    int n = 0, k = 0, s = 0, t = 0;  // 0 marks an unused pattern size
    HostKind host = HostKind::unrestricted;
    SearchMode mode = SearchMode::full;
    Count formula;
    Count oracle;
    bool match = false;
    std::string witness_g6;
    long long millis = 0;
};

// Maximum pattern count over all L_{n,k}-free graphs on [n] in the mode's
// search space (full: every labeled graph; shifted-only: every down-set of
// the pair-dominance order). Patterns: clique with s >= 2 or clique-star
// with s >= 1, t >= 2.
ExtremalRecord extremal_count(int n, int k, const PatternSpec& pattern, SearchMode mode,
                              const SearchOptions& opts = {});

// Exhaustive over all bipartite hosts with equal parts of size n.
ExtremalRecord extremal_count_bipartite(int n, int k, int s, int t,
                                        const SearchOptions& opts = {});

enum class TheoremId {
    edges_linforest,
    cliques_linforest,
    cliquestar_linforest,
    bip_biclique_linforest,
    edges_matching,
    cliques_matching,
    cliquestar_matching,
    bip_biclique_matching,
};

std::string theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

struct VerifySweep {
    int n_min = 2;
    int n_max = 6;
    int k_min = 1;
    int k_max = -1;          // -1: up to each host's natural limit
    std::vector<int> ss;     // empty: theorem-specific defaults
    std::vector<int> ts;
    SearchMode mode = SearchMode::full;
};

// One record per in-range tuple; tuples outside a theorem's hypotheses are
// skipped, per-tuple cap overruns are skipped without aborting the sweep.
std::vector<ExtremalRecord> verify_theorem(TheoremId id, const VerifySweep& sweep,
                                           const SearchOptions& opts = {});

// Largest k the theorem speaks about on a host of size n.
int max_k_for(TheoremId id, int n);

// Least m in [ceil((k+1)/2), k] with g a subgraph of H(n,k,m), or nullopt
// (no shifted graph with lf = k-1 should escape the family). Requires
// is_shifted(g) and linear_forest_max_edges(g) == k-1.
std::optional<int> check_shifted_subgraph_of_H(const Graph& g, int k);

// Every shifted graph on [n], i.e. every down-set of the dominance order on
// label pairs. Capped at n <= 8 (the count explodes beyond).
std::vector<Graph> enumerate_shifted_graphs(int n);

// Maximum matching size on a small general graph by subset DP (n <= 16).
int brute_force_matching_number(const Graph& g);

}  // namespace linf
