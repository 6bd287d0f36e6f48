#include "linf/counting.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace linf {

namespace {

// C(a,b) for a <= kMaxVertices; always fits in 64 bits there.
std::uint64_t binom_u64(int a, int b) {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, kMaxVertices + 1>, kMaxVertices + 1> t{};
        for (int i = 0; i <= kMaxVertices; ++i) {
            t[static_cast<std::size_t>(i)][0] = 1;
            for (int j = 1; j <= i; ++j) {
                t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                    t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
            }
        }
        return t;
    }();
    if (b < 0 || b > a || a < 0) return 0;
    return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

// Visits every s-clique as (vertices chosen in ascending order); calls
// visit(common) where common = intersection of all chosen neighborhoods.
template <class Visit>
void for_each_clique(const Graph& g, std::uint64_t candidates, std::uint64_t common, int depth,
                     Visit&& visit) {
    if (depth == 0) {
        visit(common);
        return;
    }
    while (candidates) {
        if (std::popcount(candidates) < depth) return;
        int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        std::uint64_t r = g.row(v + 1);
        for_each_clique(g, candidates & r, common & r, depth - 1, visit);
    }
}

std::uint64_t full_mask(int n) { return n == 64 ? ~0ull : (1ull << n) - 1; }

void check_sizes(int s, int t, bool with_t) {
    if (s < 1) throw std::invalid_argument("pattern size s must be at least 1");
    if (with_t && t < 1) throw std::invalid_argument("pattern size t must be at least 1");
}

}  // namespace

std::string PatternSpec::name() const {
    switch (kind) {
        case PatternKind::clique:
            return "K_" + std::to_string(s);
        case PatternKind::clique_star:
            return "K*_{" + std::to_string(s) + "," + std::to_string(t) + "}";
        case PatternKind::biclique:
            return "K_{" + std::to_string(s) + "," + std::to_string(t) + "}";
    }
    return {};
}

std::uint64_t count_cliques_u64(const Graph& g, int s) {
    check_sizes(s, 0, false);
    std::uint64_t total = 0;
    for_each_clique(g, full_mask(g.vertex_count()), full_mask(g.vertex_count()), s,
                    [&](std::uint64_t) { ++total; });
    return total;
}

Count count_cliques(const Graph& g, int s) { return Count(count_cliques_u64(g, s)); }

std::uint64_t count_clique_stars_u64(const Graph& g, int s, int t) {
    check_sizes(s, t, true);
    std::uint64_t total = 0;
    for_each_clique(g, full_mask(g.vertex_count()), full_mask(g.vertex_count()), s,
                    [&](std::uint64_t common) { total += binom_u64(std::popcount(common), t); });
    return total;
}

Count count_clique_stars(const Graph& g, int s, int t) {
    check_sizes(s, t, true);
    Count total;
    for_each_clique(g, full_mask(g.vertex_count()), full_mask(g.vertex_count()), s,
                    [&](std::uint64_t common) {
                        total += Count(binom_u64(std::popcount(common), t));
                    });
    return total;
}

namespace {

// Ascending choice of s X-vertices with the running common Y-neighborhood.
template <class Emit>
void one_sided_rec(const BipartiteGraph& bg, int first_x, std::uint64_t common, int left, int t,
                   Emit&& emit) {
    if (left == 0) {
        emit(binom_u64(std::popcount(common), t));
        return;
    }
    for (int x = first_x; x + left <= bg.left_size() + 1; ++x) {
        one_sided_rec(bg, x + 1, common & bg.x_row(x), left - 1, t, emit);
    }
}

template <class Emit>
void one_sided(const BipartiteGraph& bg, int s, int t, Emit&& emit) {
    check_sizes(s, t, true);
    one_sided_rec(bg, 1, full_mask(bg.right_size()), s, t, emit);
}

}  // namespace

Count count_bicliques_one_sided(const BipartiteGraph& bg, int s, int t) {
    Count total;
    one_sided(bg, s, t, [&](std::uint64_t c) { total += Count(c); });
    return total;
}

Count count_bicliques(const BipartiteGraph& bg, int s, int t) {
    if (bg.left_size() != bg.right_size()) {
        throw std::invalid_argument("count_bicliques: parts must have equal size");
    }
    Count total = count_bicliques_one_sided(bg, s, t);
    if (s != t) total += count_bicliques_one_sided(bg, t, s);
    return total;
}

std::uint64_t count_bicliques_u64(const BipartiteGraph& bg, int s, int t) {
    if (bg.left_size() != bg.right_size()) {
        throw std::invalid_argument("count_bicliques: parts must have equal size");
    }
    std::uint64_t total = 0;
    one_sided(bg, s, t, [&](std::uint64_t c) { total += c; });
    if (s != t) one_sided(bg, t, s, [&](std::uint64_t c) { total += c; });
    return total;
}

}  // namespace linf
