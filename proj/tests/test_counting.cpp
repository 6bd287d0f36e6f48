#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "linf/constructions.hpp"
#include "linf/counting.hpp"
#include "linf/formulas.hpp"
#include "linf/graph.hpp"
#include "oracles.hpp"

using namespace linf;

namespace {

// every (W1, W2) pair by direct enumeration over vertex subsets
Count clique_stars_bruteforce(const Graph& g, int s, int t) {
    int n = g.vertex_count();
    Count total;
    for (std::uint64_t w1 : testutil::subsets(n, s)) {
        bool clique = true;
        for (int u = 0; u < n && clique; ++u) {
            if (!((w1 >> u) & 1)) continue;
            for (int v = u + 1; v < n && clique; ++v) {
                if (((w1 >> v) & 1) && !g.has_edge(u + 1, v + 1)) clique = false;
            }
        }
        if (!clique) continue;
        for (std::uint64_t w2 : testutil::subsets(n, t)) {
            if (w1 & w2) continue;
            bool complete = true;
            for (int u = 0; u < n && complete; ++u) {
                if (!((w1 >> u) & 1)) continue;
                for (int v = 0; v < n && complete; ++v) {
                    if (((w2 >> v) & 1) && !g.has_edge(u + 1, v + 1)) complete = false;
                }
            }
            if (complete) total += Count(1);
        }
    }
    return total;
}

Count bicliques_one_sided_bruteforce(const BipartiteGraph& bg, int s, int t) {
    Count total;
    for (std::uint64_t sx : testutil::subsets(bg.left_size(), s)) {
        for (std::uint64_t ty : testutil::subsets(bg.right_size(), t)) {
            bool complete = true;
            for (int x = 0; x < bg.left_size() && complete; ++x) {
                if (!((sx >> x) & 1)) continue;
                if ((bg.x_row(x + 1) & ty) != ty) complete = false;
            }
            if (complete) total += Count(1);
        }
    }
    return total;
}

BipartiteGraph k24_in_4x4() {
    BipartiteGraph bg(4, 4);
    for (int x = 1; x <= 2; ++x)
        for (int y = 1; y <= 4; ++y) bg.add_edge(x, y);
    return bg;
}

}  // namespace

TEST_CASE("clique counts on named graphs") {
    CHECK(count_cliques(complete_graph(5), 3) == Count(10));
    CHECK(count_cliques(build_H(10, 5, 3), 2) == Count(17));
    CHECK(count_cliques(complete_graph(3), 4) == Count(0));

    BipartiteGraph c4(2, 2);
    c4.add_edge(1, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 1);
    c4.add_edge(2, 2);
    CHECK(count_cliques(c4.to_graph(), 3) == Count(0));  // triangle-free
}

TEST_CASE("clique count bound: at most C(n,s), equality only for complete hosts") {
    std::mt19937 rng(79);
    for (int round = 0; round < 300; ++round) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = testutil::random_graph(rng, n, 0.3 + 0.6 * (rng() % 100) / 100.0);
        CHECK(count_cliques(g, 1) == Count(n));
        bool complete = g.edge_count() == n * (n - 1) / 2;
        for (int s = 2; s <= n; ++s) {
            Count c = count_cliques(g, s);
            Count bound = binom(n, s);
            CHECK(c <= bound);
            if (!complete) CHECK(c < bound);
            if (complete) CHECK(c == bound);
        }
    }
}

TEST_CASE("clique-star counts on named graphs") {
    CHECK(count_clique_stars(complete_graph(4), 1, 2) == Count(12));
    CHECK(count_clique_stars(build_H(10, 5, 3), 1, 2) == Count(80));
    for (int n = 2; n <= 7; ++n) {
        for (int s = 1; s <= 3; ++s)
            for (int t = 1; t <= 3; ++t) {
                CHECK(count_clique_stars(complete_graph(n), s, t) ==
                      binom(n, s) * binom(n - s, t));
            }
    }
}

TEST_CASE("clique-star counter equals brute-force pair enumeration (n <= 8)") {
    std::mt19937 rng(83);
    for (int round = 0; round < 150; ++round) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = testutil::random_graph(rng, n, 0.2 + 0.7 * (rng() % 100) / 100.0);
        for (int s = 1; s <= 3; ++s)
            for (int t = 1; t <= 3; ++t)
                REQUIRE(count_clique_stars(g, s, t) == clique_stars_bruteforce(g, s, t));
    }
}

TEST_CASE("biclique counts on named graphs") {
    BipartiteGraph k33(3, 3);
    for (int x = 1; x <= 3; ++x)
        for (int y = 1; y <= 3; ++y) k33.add_edge(x, y);
    CHECK(count_bicliques(k33, 2, 2) == Count(9));

    CHECK(count_bicliques(k24_in_4x4(), 1, 1) == Count(8));
    CHECK(count_bicliques(k24_in_4x4(), 1, 2) == Count(16));

    for (int n = 1; n <= 6; ++n) {
        BipartiteGraph knn(n, n);
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) knn.add_edge(x, y);
        for (int s = 1; s <= n; ++s) CHECK(count_bicliques(knn, s, s) == binom(n, s) * binom(n, s));
    }
}

TEST_CASE("one-sided biclique counter equals brute force; both orientations summed for s != t") {
    std::mt19937 rng(89);
    for (int round = 0; round < 200; ++round) {
        int n = 1 + static_cast<int>(rng() % 6);
        BipartiteGraph bg = testutil::random_bipartite(rng, n, n, 0.2 + 0.7 * (rng() % 100) / 100.0);
        for (int s = 1; s <= 3; ++s)
            for (int t = 1; t <= 3; ++t) {
                Count one = count_bicliques_one_sided(bg, s, t);
                REQUIRE(one == bicliques_one_sided_bruteforce(bg, s, t));
                Count full = count_bicliques(bg, s, t);
                if (s == t) REQUIRE(full == one);
                else REQUIRE(full == one + count_bicliques_one_sided(bg, t, s));
            }
    }
}

TEST_CASE("counts are monotone under edge addition") {
    std::mt19937 rng(97);
    for (int round = 0; round < 300; ++round) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = testutil::random_graph(rng, n, 0.4);
        int u = 1 + static_cast<int>(rng() % n), v = 1 + static_cast<int>(rng() % n);
        if (u == v || g.has_edge(u, v)) continue;
        Count c2 = count_cliques(g, 2), c3 = count_cliques(g, 3);
        Count star = count_clique_stars(g, 1, 2);
        g.add_edge(u, v);
        CHECK(count_cliques(g, 2) >= c2);
        CHECK(count_cliques(g, 3) >= c3);
        CHECK(count_clique_stars(g, 1, 2) >= star);
    }
}

TEST_CASE("pattern validation") {
    Graph g(4);
    CHECK_THROWS_AS(count_cliques(g, 0), std::invalid_argument);
    CHECK_THROWS_AS(count_clique_stars(g, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_clique_stars(g, 1, 0), std::invalid_argument);
    BipartiteGraph uneven(2, 3);
    CHECK_THROWS_AS(count_bicliques(uneven, 1, 1), std::invalid_argument);
}

TEST_CASE("pattern names") {
    CHECK(PatternSpec::clique(3).name() == "K_3");
    CHECK(PatternSpec::clique_star(1, 2).name() == "K*_{1,2}");
    CHECK(PatternSpec::biclique(2, 2).name() == "K_{2,2}");
}
