#include "linf/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "linf/constructions.hpp"
#include "linf/formulas.hpp"
#include "linf/linear_forest.hpp"
#include "linf/shifting.hpp"

namespace linf {

std::string mode_name(SearchMode mode) {
    return mode == SearchMode::full ? "full" : "shifted-only";
}

std::optional<SearchMode> mode_from_name(std::string_view name) {
    if (name == "full") return SearchMode::full;
    if (name == "shifted-only" || name == "shifted") return SearchMode::shifted_only;
    return std::nullopt;
}

std::string host_name(HostKind host) {
    return host == HostKind::unrestricted ? "unrestricted" : "bipartite";
}

std::optional<HostKind> host_from_name(std::string_view name) {
    if (name == "unrestricted") return HostKind::unrestricted;
    if (name == "bipartite") return HostKind::bipartite;
    return std::nullopt;
}

namespace {

constexpr const char* kTheoremNames[] = {
    "edges-linforest",      "cliques-linforest",  "cliquestar-linforest",
    "bip-biclique-linforest", "edges-matching",   "cliques-matching",
    "cliquestar-matching",  "bip-biclique-matching",
};

}  // namespace

std::string theorem_name(TheoremId id) { return kTheoremNames[static_cast<int>(id)]; }

std::optional<TheoremId> theorem_from_name(std::string_view name) {
    for (int i = 0; i < 8; ++i) {
        if (name == kTheoremNames[i]) return static_cast<TheoremId>(i);
    }
    return std::nullopt;
}

int brute_force_matching_number(const Graph& g) {
    int n = g.vertex_count();
    if (n > 16) throw CapExceededError("brute_force_matching_number: n > 16");
    if (n == 0) return 0;
    std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint8_t> nu(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t set = 1; set <= full; ++set) {
        std::uint32_t vbit = set & (0u - set);
        int v = std::countr_zero(vbit);
        std::uint8_t best = nu[set ^ vbit];
        std::uint32_t nbrs = static_cast<std::uint32_t>(g.row(v + 1)) & set;
        while (nbrs) {
            std::uint32_t ubit = nbrs & (0u - nbrs);
            nbrs &= nbrs - 1;
            std::uint8_t cand = static_cast<std::uint8_t>(1 + nu[set ^ vbit ^ ubit]);
            if (cand > best) best = cand;
        }
        nu[set] = best;
    }
    return nu[full];
}

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("LINF_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

std::vector<std::pair<int, int>> pair_slots(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
    return slots;
}

// Which family is forbidden: linear forests with k edges, or matchings with
// k+1 edges. Both freeness values grow by at most 1 per added edge and never
// exceed the edge count, which the search exploits for cheap bounds.
struct FreenessOracle {
    int budget;  // free iff value(g) <= budget
    std::function<int(const Graph&)> value;
};

FreenessOracle lnk_freeness(int k) {
    return {k - 1, [](const Graph& g) { return linear_forest_max_edges(g); }};
}

FreenessOracle matching_freeness(int k) {
    return {k, [](const Graph& g) { return brute_force_matching_number(g); }};
}

struct UnrestrictedHost {
    Graph g;
    std::vector<std::pair<int, int>> slots;
    std::vector<PatternSpec> patterns;
    bool downsets_only = false;
    int edges = 0;

    std::size_t slot_count() const { return slots.size(); }

    // In shifted-only mode an edge slot may be taken only once both of its
    // immediate predecessors in the pair-dominance order are present, which
    // keeps the edge set a down-set at every step.
    bool can_include(std::size_t i) const {
        if (!downsets_only) return true;
        auto [u, v] = slots[i];
        if (u >= 2 && !g.has_edge(u - 1, v)) return false;
        if (v - 1 > u && !g.has_edge(u, v - 1)) return false;
        return true;
    }

    void include(std::size_t i) {
        g.add_edge(slots[i].first, slots[i].second);
        ++edges;
    }
    void undo(std::size_t i) {
        g.remove_edge(slots[i].first, slots[i].second);
        --edges;
    }

    int edge_total() const { return edges; }
    const Graph& value_graph() const { return g; }

    std::size_t pattern_count() const { return patterns.size(); }
    std::uint64_t eval_pattern(std::size_t i) const {
        const auto& p = patterns[i];
        return p.kind == PatternKind::clique ? count_cliques_u64(g, p.s)
                                             : count_clique_stars_u64(g, p.s, p.t);
    }

    std::string witness_string() const { return encode_graph6(g); }
    const Graph& witness_graph() const { return g; }
};

struct BipartiteHost {
    BipartiteGraph bg;
    Graph mirror;  // X at 1..n, Y at n+1..2n; freeness is checked here
    std::vector<std::pair<int, int>> cells;
    std::vector<PatternSpec> patterns;
    int edges = 0;

    std::size_t slot_count() const { return cells.size(); }
    bool can_include(std::size_t) const { return true; }

    void include(std::size_t i) {
        auto [x, y] = cells[i];
        bg.add_edge(x, y);
        mirror.add_edge(x, bg.left_size() + y);
        ++edges;
    }
    void undo(std::size_t i) {
        auto [x, y] = cells[i];
        bg.remove_edge(x, y);
        mirror.remove_edge(x, bg.left_size() + y);
        --edges;
    }

    int edge_total() const { return edges; }
    const Graph& value_graph() const { return mirror; }

    std::size_t pattern_count() const { return patterns.size(); }
    std::uint64_t eval_pattern(std::size_t i) const {
        return count_bicliques_u64(bg, patterns[i].s, patterns[i].t);
    }

    std::string witness_string() const {
        return encode_graph6(mirror) + " parts=" + std::to_string(bg.left_size()) + "," +
               std::to_string(bg.right_size());
    }
    const Graph& witness_graph() const { return mirror; }
};

template <class Host>
struct BestOf {
    bool any = false;
    std::vector<std::uint64_t> best;
    std::vector<Host> witness;
};

// Monotone best-so-far (pattern 0), shared across workers for reporting
// only; pruning never reads it, so results do not depend on scheduling.
void bump_progress(std::atomic<std::uint64_t>* progress, std::uint64_t value) {
    if (!progress) return;
    std::uint64_t cur = progress->load(std::memory_order_relaxed);
    while (cur < value &&
           !progress->compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
}

template <class Host>
void search_dfs(Host& host, std::size_t idx, int bound, const FreenessOracle& oracle,
                BestOf<Host>& out, std::atomic<std::uint64_t>* progress) {
    if (idx == host.slot_count()) {
        std::size_t np = host.pattern_count();
        if (!out.any) {
            out.any = true;
            out.best.resize(np);
            out.witness.assign(np, host);
            for (std::size_t i = 0; i < np; ++i) out.best[i] = host.eval_pattern(i);
            if (np) bump_progress(progress, out.best[0]);
            return;
        }
        for (std::size_t i = 0; i < np; ++i) {
            std::uint64_t c = host.eval_pattern(i);
            if (c > out.best[i]) {
                out.best[i] = c;
                out.witness[i] = host;
                if (i == 0) bump_progress(progress, c);
            }
        }
        return;
    }
    if (host.can_include(idx)) {
        host.include(idx);
        int nb = std::min(bound + 1, host.edge_total());
        bool is_free = nb <= oracle.budget;
        if (!is_free) {
            nb = oracle.value(host.value_graph());
            is_free = nb <= oracle.budget;
        }
        if (is_free) search_dfs(host, idx + 1, nb, oracle, out, progress);
        host.undo(idx);
    }
    search_dfs(host, idx + 1, bound, oracle, out, progress);
}

template <class Host>
void collect_tasks(Host& host, std::size_t idx, int bound, std::size_t depth,
                   const FreenessOracle& oracle, std::vector<std::pair<Host, int>>& tasks) {
    if (idx == depth) {
        tasks.emplace_back(host, bound);
        return;
    }
    if (host.can_include(idx)) {
        host.include(idx);
        int nb = std::min(bound + 1, host.edge_total());
        bool is_free = nb <= oracle.budget;
        if (!is_free) {
            nb = oracle.value(host.value_graph());
            is_free = nb <= oracle.budget;
        }
        if (is_free) collect_tasks(host, idx + 1, nb, depth, oracle, tasks);
        host.undo(idx);
    }
    collect_tasks(host, idx + 1, bound, depth, oracle, tasks);
}

template <class Host>
void merge_best(BestOf<Host>& into, const BestOf<Host>& from) {
    if (!from.any) return;
    if (!into.any) {
        into = from;
        return;
    }
    for (std::size_t i = 0; i < into.best.size(); ++i) {
        if (from.best[i] > into.best[i]) {
            into.best[i] = from.best[i];
            into.witness[i] = from.witness[i];
        }
    }
}

// The search space is split by the first `split_depth` slot decisions into
// independent subtree tasks; merging in task order keeps the reported
// witness identical to a serial run.
template <class Host>
BestOf<Host> run_search(const Host& proto, const FreenessOracle& oracle,
                        const SearchOptions& opts) {
    int threads = resolve_threads(opts.threads);
    std::atomic<std::uint64_t> progress{0};
    if (threads <= 1 || proto.slot_count() == 0) {
        Host host = proto;
        BestOf<Host> out;
        search_dfs(host, 0, 0, oracle, out, &progress);
        return out;
    }

    std::size_t depth =
        std::min(proto.slot_count(), static_cast<std::size_t>(std::max(0, opts.split_depth)));
    std::vector<std::pair<Host, int>> tasks;
    {
        Host host = proto;
        collect_tasks(host, 0, 0, depth, oracle, tasks);
    }
    std::vector<BestOf<Host>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            Host host = tasks[i].first;
            search_dfs(host, depth, tasks[i].second, oracle, results[i], &progress);
        }
    };
    std::vector<std::thread> pool;
    int spawn = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(threads),
                                                       std::max<std::size_t>(tasks.size(), 1)));
    for (int i = 0; i < spawn; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    BestOf<Host> merged;
    for (const auto& r : results) merge_best(merged, r);
    return merged;
}

enum class FreeFamily { linear_forests, matchings };

struct GroupRow {
    std::uint64_t oracle = 0;
    std::string witness;
};

long long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

FreenessOracle make_oracle(FreeFamily family, int k) {
    return family == FreeFamily::linear_forests ? lnk_freeness(k) : matching_freeness(k);
}

// Witnesses are re-checked after the search: they must be free themselves
// and attain the reported count.
template <class Host>
void recheck_witnesses(const BestOf<Host>& result, const FreenessOracle& oracle) {
    for (std::size_t i = 0; i < result.best.size(); ++i) {
        const Host& w = result.witness[i];
        if (oracle.value(w.value_graph()) > oracle.budget ||
            w.eval_pattern(i) != result.best[i]) {
            throw std::logic_error("extremal search produced an inconsistent witness");
        }
    }
}

std::vector<GroupRow> run_unrestricted_group(int n, int k,
                                             const std::vector<PatternSpec>& patterns,
                                             SearchMode mode, FreeFamily family,
                                             const SearchOptions& opts, long long& millis) {
    UnrestrictedHost proto{Graph(n), pair_slots(n), patterns,
                           mode == SearchMode::shifted_only, 0};
    long long start = now_ms();
    FreenessOracle oracle = make_oracle(family, k);
    BestOf<UnrestrictedHost> result = run_search(proto, oracle, opts);
    millis = now_ms() - start;
    recheck_witnesses(result, oracle);
    std::vector<GroupRow> rows(patterns.size());
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        rows[i] = {result.best[i], result.witness[i].witness_string()};
    }
    return rows;
}

std::vector<GroupRow> run_bipartite_group(int n, int k,
                                          const std::vector<PatternSpec>& patterns,
                                          FreeFamily family, const SearchOptions& opts,
                                          long long& millis) {
    std::vector<std::pair<int, int>> cells;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) cells.emplace_back(x, y);
    BipartiteHost proto{BipartiteGraph(n, n), Graph(2 * n), cells, patterns, 0};
    long long start = now_ms();
    FreenessOracle oracle = make_oracle(family, k);
    BestOf<BipartiteHost> result = run_search(proto, oracle, opts);
    millis = now_ms() - start;
    recheck_witnesses(result, oracle);
    std::vector<GroupRow> rows(patterns.size());
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        rows[i] = {result.best[i], result.witness[i].witness_string()};
    }
    return rows;
}

void check_unrestricted_cap(int n, SearchMode mode, const SearchOptions& opts) {
    int cap = mode == SearchMode::full ? opts.full_cap : opts.shifted_cap;
    if (n > cap) {
        throw CapExceededError("extremal search: n = " + std::to_string(n) + " exceeds " +
                               mode_name(mode) + " cap " + std::to_string(cap));
    }
}

}  // namespace

ExtremalRecord extremal_count(int n, int k, const PatternSpec& pattern, SearchMode mode,
                              const SearchOptions& opts) {
    if (n < 2 || k < 1 || k > n - 1) {
        throw std::invalid_argument("extremal_count: need n >= 2 and 1 <= k <= n-1");
    }
    if (pattern.kind == PatternKind::biclique) {
        throw std::invalid_argument(
            "extremal_count: biclique patterns need a bipartite host (shifted-only search is "
            "not asserted there)");
    }
    check_unrestricted_cap(n, mode, opts);

    ExtremalRecord rec;
    rec.n = n;
    rec.k = k;
    rec.s = pattern.s;
    rec.t = pattern.kind == PatternKind::clique ? 0 : pattern.t;
    rec.host = HostKind::unrestricted;
    rec.mode = mode;
    if (pattern.kind == PatternKind::clique) {
        rec.theorem = theorem_name(TheoremId::cliques_linforest);
        rec.formula = ex_cliques_linforest(n, k, pattern.s);
    } else {
        rec.theorem = theorem_name(TheoremId::cliquestar_linforest);
        rec.formula = ex_cliquestar_linforest(n, k, pattern.s, pattern.t);
    }

    auto rows = run_unrestricted_group(n, k, {pattern}, mode, FreeFamily::linear_forests, opts,
                                       rec.millis);
    rec.oracle = Count(rows[0].oracle);
    rec.witness_g6 = rows[0].witness;
    rec.match = rec.formula == rec.oracle;
    return rec;
}

ExtremalRecord extremal_count_bipartite(int n, int k, int s, int t, const SearchOptions& opts) {
    if (n < 1 || k < 1) {
        throw std::invalid_argument("extremal_count_bipartite: need n >= 1 and k >= 1");
    }
    if (n > opts.bipartite_cap) {
        throw CapExceededError("extremal_count_bipartite: part size " + std::to_string(n) +
                               " exceeds cap " + std::to_string(opts.bipartite_cap));
    }

    ExtremalRecord rec;
    rec.theorem = theorem_name(TheoremId::bip_biclique_linforest);
    rec.n = n;
    rec.k = k;
    rec.s = s;
    rec.t = t;
    rec.host = HostKind::bipartite;
    rec.mode = SearchMode::full;
    rec.formula = ex_bip_biclique_linforest(n, k, s, t);

    auto rows = run_bipartite_group(n, k, {PatternSpec::biclique(s, t)},
                                    FreeFamily::linear_forests, opts, rec.millis);
    rec.oracle = Count(rows[0].oracle);
    rec.witness_g6 = rows[0].witness;
    rec.match = rec.formula == rec.oracle;
    return rec;
}

namespace {

bool is_bipartite_theorem(TheoremId id) {
    return id == TheoremId::bip_biclique_linforest || id == TheoremId::bip_biclique_matching;
}

bool is_matching_theorem(TheoremId id) {
    return id == TheoremId::edges_matching || id == TheoremId::cliques_matching ||
           id == TheoremId::cliquestar_matching || id == TheoremId::bip_biclique_matching;
}

std::vector<PatternSpec> sweep_patterns(TheoremId id, const VerifySweep& sweep) {
    std::vector<int> ss = sweep.ss;
    std::vector<int> ts = sweep.ts;
    switch (id) {
        case TheoremId::edges_linforest:
        case TheoremId::edges_matching:
            return {PatternSpec::clique(2)};
        case TheoremId::cliques_linforest:
            if (ss.empty()) ss = {2, 3, 4};
            break;
        case TheoremId::cliques_matching:
            if (ss.empty()) ss = {2, 3};
            break;
        case TheoremId::cliquestar_linforest:
            if (ss.empty()) ss = {1, 2};
            if (ts.empty()) ts = {2, 3};
            break;
        case TheoremId::cliquestar_matching:
            if (ss.empty()) ss = {1};
            if (ts.empty()) ts = {2};
            break;
        case TheoremId::bip_biclique_linforest:
            if (ss.empty()) ss = {1, 2};
            if (ts.empty()) ts = {1, 2};
            break;
        case TheoremId::bip_biclique_matching:
            if (ss.empty()) ss = {2};
            if (ts.empty()) ts = {2, 3};
            break;
    }

    std::vector<PatternSpec> out;
    if (id == TheoremId::cliques_linforest || id == TheoremId::cliques_matching) {
        for (int s : ss) out.push_back(PatternSpec::clique(s));
        return out;
    }
    bool bip = is_bipartite_theorem(id);
    for (int s : ss)
        for (int t : ts) {
            out.push_back(bip ? PatternSpec::biclique(s, t) : PatternSpec::clique_star(s, t));
        }
    return out;
}

Count formula_for(TheoremId id, int n, int k, const PatternSpec& p) {
    switch (id) {
        case TheoremId::edges_linforest:
            return ex_edges_linforest(n, k);
        case TheoremId::cliques_linforest:
            return ex_cliques_linforest(n, k, p.s);
        case TheoremId::cliquestar_linforest:
            return ex_cliquestar_linforest(n, k, p.s, p.t);
        case TheoremId::bip_biclique_linforest:
            return ex_bip_biclique_linforest(n, k, p.s, p.t);
        case TheoremId::edges_matching:
            return ex_edges_matching(n, k);
        case TheoremId::cliques_matching:
            return ex_cliques_matching(n, k, p.s);
        case TheoremId::cliquestar_matching:
            return ex_cliquestar_matching(n, k, p.s, p.t);
        case TheoremId::bip_biclique_matching:
            return ex_bip_biclique_matching(n, k, p.s, p.t);
    }
    throw std::logic_error("formula_for: unknown theorem");
}

int k_floor(TheoremId id) { return id == TheoremId::bip_biclique_linforest ? 2 : 1; }

}  // namespace

int max_k_for(TheoremId id, int n) {
    if (is_bipartite_theorem(id)) {
        return id == TheoremId::bip_biclique_linforest ? 2 * n - 1 : n;
    }
    return is_matching_theorem(id) ? (n - 1) / 2 : n - 1;
}

std::vector<ExtremalRecord> verify_theorem(TheoremId id, const VerifySweep& sweep,
                                           const SearchOptions& opts) {
    bool bip = is_bipartite_theorem(id);
    bool matching = is_matching_theorem(id);
    if (sweep.mode == SearchMode::shifted_only && (bip || matching)) {
        throw std::invalid_argument(
            "verify_theorem: shifted-only search is only justified for clique and clique-star "
            "patterns on unrestricted hosts with the linear-forest family");
    }
    FreeFamily family = matching ? FreeFamily::matchings : FreeFamily::linear_forests;
    std::vector<PatternSpec> patterns = sweep_patterns(id, sweep);

    std::vector<ExtremalRecord> records;
    for (int n = std::max(sweep.n_min, bip ? 1 : 2); n <= sweep.n_max; ++n) {
        int klo = std::max(sweep.k_min, k_floor(id));
        int khi = max_k_for(id, n);
        if (sweep.k_max >= 0) khi = std::min(khi, sweep.k_max);
        for (int k = klo; k <= khi; ++k) {
            long long millis = 0;
            std::vector<GroupRow> rows;
            try {
                rows = bip ? run_bipartite_group(n, k, patterns, family, opts, millis)
                           : run_unrestricted_group(n, k, patterns, sweep.mode, family, opts,
                                                    millis);
            } catch (const CapExceededError&) {
                continue;  // skip the tuple, keep sweeping
            }
            for (std::size_t i = 0; i < patterns.size(); ++i) {
                ExtremalRecord rec;
                rec.theorem = theorem_name(id);
                rec.n = n;
                rec.k = k;
                rec.s = patterns[i].s;
                rec.t = patterns[i].kind == PatternKind::clique ? 0 : patterns[i].t;
                rec.host = bip ? HostKind::bipartite : HostKind::unrestricted;
                rec.mode = sweep.mode;
                rec.formula = formula_for(id, n, k, patterns[i]);
                rec.oracle = Count(rows[i].oracle);
                rec.match = rec.formula == rec.oracle;
                rec.witness_g6 = rows[i].witness;
                rec.millis = millis;
                records.push_back(std::move(rec));
            }
        }
    }
    return records;
}

std::optional<int> check_shifted_subgraph_of_H(const Graph& g, int k) {
    if (!is_shifted(g)) {
        throw std::invalid_argument("check_shifted_subgraph_of_H: graph is not shifted");
    }
    if (linear_forest_max_edges(g) != k - 1) {
        throw std::invalid_argument(
            "check_shifted_subgraph_of_H: largest linear forest must have exactly k-1 edges");
    }
    int n = g.vertex_count();
    for (int m = (k + 2) / 2; m <= k && m <= n; ++m) {
        Graph h = build_H(n, k, m);
        bool contained = true;
        for (int v = 1; v <= n && contained; ++v) contained = (g.row(v) & ~h.row(v)) == 0;
        if (contained) return m;
    }
    return std::nullopt;
}

namespace {

void rec_shifted(UnrestrictedHost& host, std::size_t idx, std::vector<Graph>& out) {
    if (idx == host.slot_count()) {
        out.push_back(host.g);
        return;
    }
    if (host.can_include(idx)) {
        host.include(idx);
        rec_shifted(host, idx + 1, out);
        host.undo(idx);
    }
    rec_shifted(host, idx + 1, out);
}

}  // namespace

std::vector<Graph> enumerate_shifted_graphs(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_shifted_graphs: negative n");
    if (n > 8) {
        throw CapExceededError("enumerate_shifted_graphs: n > 8 produces too many graphs");
    }
    UnrestrictedHost host{Graph(n), pair_slots(n), {}, true, 0};
    std::vector<Graph> out;
    rec_shifted(host, 0, out);
    return out;
}

}  // namespace linf
