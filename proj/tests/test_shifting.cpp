#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linf/graph.hpp"
#include "linf/linear_forest.hpp"
#include "linf/shifting.hpp"
#include "oracles.hpp"

using namespace linf;

namespace {

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph graph_from_mask(int n, std::uint32_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v, ++bit)
            if ((mask >> bit) & 1) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("shift rewrites j-edges toward i") {
    auto [g1, step1] = shift(from_edges(3, {{2, 3}}), 1, 2);
    CHECK(g1 == from_edges(3, {{1, 3}}));
    CHECK(step1.changed == 1);

    // collision clause: target already present, nothing moves
    auto [g2, step2] = shift(from_edges(3, {{1, 3}, {2, 3}}), 1, 2);
    CHECK(g2 == from_edges(3, {{1, 3}, {2, 3}}));
    CHECK(step2.changed == 0);
}

TEST_CASE("complete graphs are fixpoints") {
    Graph k5 = complete_graph(5);
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) CHECK(shift(k5, i, j).first == k5);
}

TEST_CASE("shift argument validation") {
    Graph g(4);
    CHECK_THROWS_AS(shift(g, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(shift(g, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(shift(g, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(shift(g, 1, 5), std::invalid_argument);
}

TEST_CASE("edge count is always preserved") {
    std::mt19937 rng(71);
    for (int round = 0; round < 2000; ++round) {
        int n = 2 + static_cast<int>(rng() % 8);
        Graph g = testutil::random_graph(rng, n, 0.1 + 0.8 * (rng() % 100) / 100.0);
        int i = 1 + static_cast<int>(rng() % (n - 1));
        int j = i + 1 + static_cast<int>(rng() % (n - i));
        CHECK(shift(g, i, j).first.edge_count() == g.edge_count());
    }
}

TEST_CASE("is_shifted on named graphs") {
    Graph star1(5);
    for (int v = 2; v <= 5; ++v) star1.add_edge(1, v);
    CHECK(is_shifted(star1));

    Graph star5(5);
    for (int v = 1; v <= 4; ++v) star5.add_edge(v, 5);
    CHECK_FALSE(is_shifted(star5));

    CHECK(is_shifted(complete_graph(6)));
    CHECK(is_shifted(empty_graph(6)));
    CHECK(is_shifted(empty_graph(0)));
}

TEST_CASE("down-set characterization equals the fixpoint definition on all n<=5 graphs") {
    for (int n = 1; n <= 5; ++n) {
        int slots = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
            Graph g = graph_from_mask(n, mask);
            bool fixpoint = true;
            for (int i = 1; i <= n && fixpoint; ++i)
                for (int j = i + 1; j <= n && fixpoint; ++j)
                    fixpoint = shift(g, i, j).first == g;
            REQUIRE(is_shifted(g) == fixpoint);
        }
    }
}

TEST_CASE("closure of the star centered at the top label is the star at 1") {
    Graph star5(5);
    for (int v = 1; v <= 4; ++v) star5.add_edge(v, 5);
    Graph star1(5);
    for (int v = 2; v <= 5; ++v) star1.add_edge(1, v);
    CHECK(shift_closure(star5) == star1);
}

TEST_CASE("closure is the identity on shifted graphs") {
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
        Graph g = graph_from_mask(5, mask);
        if (!is_shifted(g)) continue;
        CHECK(shift_closure(g) == g);
    }
}

TEST_CASE("closure output is shifted and preserves the edge count") {
    std::mt19937 rng(73);
    for (int round = 0; round < 10000; ++round) {
        int n = 1 + static_cast<int>(rng() % 9);
        Graph g = testutil::random_graph(rng, n, 0.1 + 0.8 * (rng() % 100) / 100.0);
        Graph closed = shift_closure(g);
        REQUIRE(is_shifted(closed));
        REQUIRE(closed.edge_count() == g.edge_count());
        // closures never increase the best linear forest
        if (round % 10 == 0) {
            REQUIRE(linear_forest_max_edges(closed) <= linear_forest_max_edges(g));
        }
    }
}

TEST_CASE("closure terminates within the label-sum budget") {
    std::mt19937 rng(101);
    for (int round = 0; round < 500; ++round) {
        int n = 2 + static_cast<int>(rng() % 8);
        Graph g = testutil::random_graph(rng, n, 0.2 + 0.7 * (rng() % 100) / 100.0);
        long long budget = 0;
        for (auto [u, v] : g.edges()) budget += u + v;

        // replay the sweep-and-restart loop by hand, counting rewrites
        Graph cur = g;
        long long rewrites = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 1; i <= n && !changed; ++i) {
                for (int j = i + 1; j <= n && !changed; ++j) {
                    auto [next, step] = shift(cur, i, j);
                    if (step.changed > 0) {
                        cur = next;
                        rewrites += step.changed;
                        changed = true;
                    }
                }
            }
        }
        REQUIRE(rewrites <= budget);
        REQUIRE(cur == shift_closure(g));
    }
}
