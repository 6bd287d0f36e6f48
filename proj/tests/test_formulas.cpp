#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linf/formulas.hpp"

using namespace linf;

TEST_CASE("binomial with zero convention") {
    CHECK(binom(5, 2) == Count(10));
    CHECK(binom(2, 3) == Count(0));
    CHECK(binom(-1, 0) == Count(0));
    CHECK(binom(7, 0) == Count(1));
    CHECK(binom(0, 0) == Count(1));
    CHECK(binom(6, -2) == Count(0));
    CHECK(binom(100, 50).to_string() == "100891344545564193334812497256");
}

TEST_CASE("binomial matches Pascal recurrence up to 80") {
    for (int a = 1; a <= 80; ++a) {
        for (int b = 1; b < a; ++b) {
            CHECK(binom(a, b) == binom(a - 1, b - 1) + binom(a - 1, b));
        }
    }
}

TEST_CASE("matching-family evaluators") {
    CHECK(ex_edges_matching(7, 2) == Count(11));
    CHECK(ex_edges_matching(5, 2) == Count(10));
    CHECK(ex_edges_matching(9, 1) == Count(8));

    CHECK(ex_cliques_matching(9, 2, 3) == Count(10));
    CHECK(ex_cliques_matching(100, 2, 2) == Count(197));
    CHECK(ex_cliques_matching(9, 2, 7) == Count(0));  // s > 2k+1

    CHECK(ex_cliquestar_matching(9, 2, 1, 2) == Count(63));
    CHECK(ex_cliquestar_matching(9, 2, 2, 2) == Count(30));
    CHECK(ex_cliquestar_matching(9, 1, 3, 2) == Count(0));  // s+t > 2k+1 and s > k

    CHECK(ex_bip_biclique_matching(5, 3, 2, 2) == Count(30));
    CHECK(ex_bip_biclique_matching(5, 3, 2, 3) == Count(40));
    CHECK(ex_bip_biclique_matching(5, 1, 2, 3) == Count(0));  // k < s and k < t
}

TEST_CASE("linear-forest-family evaluators") {
    CHECK(ex_edges_linforest(10, 5) == Count(17));
    CHECK(ex_edges_linforest(10, 6) == Count(18));
    CHECK(ex_edges_linforest(10, 1) == Count(0));

    CHECK(ex_cliques_linforest(10, 5, 3) == Count(10));
    CHECK(ex_cliques_linforest(100, 5, 3) == Count(98));
    CHECK(ex_cliques_linforest(10, 5, 2) == ex_edges_linforest(10, 5));

    CHECK(ex_cliquestar_linforest(10, 5, 1, 2) == Count(80));
    CHECK(ex_cliquestar_linforest(10, 9, 1, 2) == Count(252));
    CHECK(ex_cliquestar_linforest(10, 3, 4, 2) == Count(0));  // s+t > k and s > ceil((k+1)/2)

    CHECK(ex_bip_biclique_linforest(4, 5, 1, 1) == Count(8));
    CHECK(ex_bip_biclique_linforest(4, 4, 1, 1) == Count(7));
    CHECK(ex_bip_biclique_linforest(5, 4, 1, 2) == Count(20));
}

TEST_CASE("winning branch reporting") {
    CHECK(ex_edges_linforest_detail(10, 5).branch == "dominating");
    CHECK(ex_edges_linforest_detail(10, 9).branch == "clique");
    CHECK(ex_cliques_linforest_detail(10, 5, 3).branch == "clique");
    CHECK(ex_cliques_linforest_detail(100, 5, 3).branch == "dominating");
    CHECK(ex_bip_biclique_linforest_detail(4, 5, 1, 1).branch == "odd:s=t");
    CHECK(ex_bip_biclique_linforest_detail(4, 4, 1, 1).branch == "even:s=t=1");
    CHECK(ex_bip_biclique_linforest_detail(5, 4, 1, 2).branch == "even:s=1,t>=2");
    CHECK(ex_bip_biclique_linforest_detail(5, 4, 2, 2).branch == "even:s=t>=2");
    CHECK(ex_bip_biclique_linforest_detail(5, 5, 1, 2).branch == "odd:s!=t");
}

TEST_CASE("closed forms for H(n,k,m)") {
    CHECK(count_H_cliques_closed(10, 5, 3, 2) == Count(17));
    CHECK(count_H_cliques_closed(10, 5, 5, 2) == Count(10));
    CHECK(count_H_cliquestars_closed(10, 5, 3, 1, 2) == Count(80));
    CHECK(count_H_cliquestars_closed(10, 5, 5, 1, 2) == Count(30));
    CHECK_THROWS_AS(count_H_cliques_closed(10, 5, 2, 2), std::domain_error);
}

TEST_CASE("closed form for gstar") {
    CHECK(f_bip_closed(4, 2, 1, 1, 1) == Count(7));
    for (int n = 2; n <= 8; ++n)
        for (int kceil = 0; kceil <= n; ++kceil)
            for (int s = 1; s <= 3; ++s) {
                CHECK(f_bip_closed(n, kceil, kceil, s, s) == binom(kceil, s) * binom(n, s));
            }
    CHECK_THROWS_AS(f_bip_closed(4, 5, 1, 1, 1), std::domain_error);
}

TEST_CASE("range errors outside each theorem's hypotheses") {
    CHECK_THROWS_AS(ex_edges_matching(4, 2), std::domain_error);      // n < 2k+1
    CHECK_THROWS_AS(ex_cliques_matching(9, 2, 1), std::domain_error); // s < 2
    CHECK_THROWS_AS(ex_cliquestar_matching(9, 2, 1, 1), std::domain_error);
    CHECK_THROWS_AS(ex_bip_biclique_matching(5, 3, 1, 2), std::domain_error);
    CHECK_THROWS_AS(ex_edges_linforest(10, 0), std::domain_error);
    CHECK_THROWS_AS(ex_edges_linforest(10, 10), std::domain_error);   // k > n-1
    CHECK_THROWS_AS(ex_cliques_linforest(5, 5, 2), std::domain_error);
    CHECK_THROWS_AS(ex_cliquestar_linforest(10, 5, 1, 1), std::domain_error);
    CHECK_THROWS_AS(ex_bip_biclique_linforest(4, 9, 1, 1), std::domain_error);  // 2n < k+1
    CHECK_THROWS_AS(ex_bip_biclique_linforest(1, 4, 1, 1), std::domain_error);  // n < k/2
    CHECK_THROWS_AS(ex_bip_biclique_linforest(4, 1, 1, 2), std::domain_error);  // k=1, not s=t=1
    CHECK(ex_bip_biclique_linforest(4, 1, 1, 1) == Count(0));  // k=1 trivial case
}

TEST_CASE("edge and clique evaluators agree at s=2 (n <= 60)") {
    for (int n = 2; n <= 60; ++n)
        for (int k = 1; k <= n - 1; ++k)
            CHECK(ex_cliques_linforest(n, k, 2) == ex_edges_linforest(n, k));
}

TEST_CASE("double-counting identity for clique-star sizes") {
    for (int k = 0; k <= 60; ++k)
        for (int s = 0; s <= k; ++s)
            for (int t = 0; s + t <= k; ++t)
                CHECK(binom(k, s + t) * binom(s + t, t) == binom(k, s) * binom(k - s, t));
}

TEST_CASE("the maximum of f(m) over the whole m range sits at an endpoint") {
    for (int n = 3; n <= 60; n += 3) {
        for (int k = 1; k <= std::min(12, n - 1); ++k) {
            for (int s = 2; s <= 4; ++s) {
                Count best = count_H_cliques_closed(n, k, (k + 2) / 2, s);
                for (int m = (k + 2) / 2 + 1; m <= k; ++m) {
                    Count cur = count_H_cliques_closed(n, k, m, s);
                    if (cur > best) best = cur;
                }
                CHECK(best == ex_cliques_linforest(n, k, s));
            }
        }
    }
}

TEST_CASE("discrete convexity of f(m) on a sample") {
    for (int n = 6; n <= 40; n += 7) {
        for (int k = 2; k <= std::min(12, n); ++k) {
            for (int s = 2; s <= 4; ++s) {
                for (int m = (k + 2) / 2 + 1; m < k; ++m) {
                    Count second = count_H_cliques_closed(n, k, m + 1, s) -
                                   count_H_cliques_closed(n, k, m, s) * Count(2) +
                                   count_H_cliques_closed(n, k, m - 1, s);
                    CHECK(second >= Count(0));
                }
            }
        }
    }
}
