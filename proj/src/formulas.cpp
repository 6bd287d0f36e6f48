#include "linf/formulas.hpp"

#include <stdexcept>
#include <string>

namespace linf {

Count binom(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return Count();
    if (b > a - b) b = a - b;
    Count result(1ll);
    for (long long i = 1; i <= b; ++i) {
        result *= Count(a - b + i);
        result = result.divide_exact(static_cast<std::uint32_t>(i));
    }
    return result;
}

namespace {

[[noreturn]] void range_error(const std::string& which, const std::string& requirement) {
    throw std::domain_error(which + ": formula not asserted outside " + requirement);
}

FormulaResult pick_max(Count clique_branch, Count dominating_branch) {
    if (clique_branch >= dominating_branch) return {std::move(clique_branch), "clique"};
    return {std::move(dominating_branch), "dominating"};
}

}  // namespace

FormulaResult ex_edges_matching_detail(long long n, long long k) {
    if (k < 0 || n < 2 * k + 1) range_error("ex_edges_matching", "n >= 2k+1");
    return pick_max(binom(2 * k + 1, 2), binom(k, 2) + Count(k) * Count(n - k));
}

FormulaResult ex_cliques_matching_detail(long long n, long long k, long long s) {
    if (s < 2) range_error("ex_cliques_matching", "s >= 2");
    if (k < 0 || n < 2 * k + 1) range_error("ex_cliques_matching", "n >= 2k+1");
    return pick_max(binom(2 * k + 1, s), binom(k, s) + Count(n - k) * binom(k, s - 1));
}

FormulaResult ex_cliquestar_matching_detail(long long n, long long k, long long s, long long t) {
    if (s < 1 || t < 2) range_error("ex_cliquestar_matching", "s >= 1, t >= 2");
    if (k < 0 || n < 2 * k + 1) range_error("ex_cliquestar_matching", "n >= 2k+1");
    Count dominating = binom(k, s) * binom(n - s, t) +
                       Count(n - k) * binom(k, s + t - 1) * binom(s + t - 1, t);
    return pick_max(binom(2 * k + 1, s + t) * binom(s + t, t), std::move(dominating));
}

FormulaResult ex_bip_biclique_matching_detail(long long n, long long k, long long s, long long t) {
    if (s < 2 || t < 2) range_error("ex_bip_biclique_matching", "s,t >= 2");
    if (k < 0 || n < k) range_error("ex_bip_biclique_matching", "n >= k");
    if (s == t) return {binom(k, s) * binom(n, s), "s=t"};
    return {binom(k, s) * binom(n, t) + binom(k, t) * binom(n, s), "s!=t"};
}

FormulaResult ex_edges_linforest_detail(long long n, long long k) {
    if (k < 1 || k > n - 1) range_error("ex_edges_linforest", "1 <= k <= n-1");
    Count c(k % 2 == 0 ? 1ll : 0ll);
    Count dominating = binom(n, 2) - binom(n - (k - 1) / 2, 2) + c;
    return pick_max(binom(k, 2), std::move(dominating));
}

FormulaResult ex_cliques_linforest_detail(long long n, long long k, long long s) {
    if (s < 2) range_error("ex_cliques_linforest", "s >= 2");
    if (k < 1 || n < k + 1) range_error("ex_cliques_linforest", "n >= k+1");
    long long hi = (k + 2) / 2;  // ceil((k+1)/2)
    long long lo = (k - 1) / 2;  // floor((k-1)/2)
    return pick_max(binom(k, s), binom(hi, s) + Count(n - hi) * binom(lo, s - 1));
}

FormulaResult ex_cliquestar_linforest_detail(long long n, long long k, long long s, long long t) {
    if (s < 1 || t < 2) range_error("ex_cliquestar_linforest", "s >= 1, t >= 2");
    if (k < 1 || n < k + 1) range_error("ex_cliquestar_linforest", "n >= k+1");
    long long hi = (k + 2) / 2;
    long long lo = (k - 1) / 2;
    Count dominating = binom(lo, s) * binom(n - s, t) +
                       Count(n - hi) * binom(lo, s - 1) * binom(lo - s + 1, t) +
                       (binom(hi, s) - binom(lo, s)) * binom(hi - s, t);
    return pick_max(binom(k, s + t) * binom(s + t, t), std::move(dominating));
}

FormulaResult ex_bip_biclique_linforest_detail(long long n, long long k, long long s, long long t) {
    if (s < 1 || t < 1) range_error("ex_bip_biclique_linforest", "s,t >= 1");
    if (k == 1 && s == 1 && t == 1) return {Count(), "k=1 trivial"};
    if (k < 2) range_error("ex_bip_biclique_linforest", "k >= 2");
    if (n < k / 2 || 2 * n < k + 1) {
        range_error("ex_bip_biclique_linforest", "n >= ceil((k-1)/2) and 2n >= k+1");
    }
    if (k % 2 == 1) {
        long long h = (k - 1) / 2;
        if (s == t) return {binom(h, s) * binom(n, s), "odd:s=t"};
        return {binom(h, s) * binom(n, t) + binom(h, t) * binom(n, s), "odd:s!=t"};
    }
    long long h = k / 2;
    if (s == t) {
        if (s == 1) return {Count(h) * Count(n) - Count(h) + Count(1ll), "even:s=t=1"};
        return {binom(h - 1, s) * binom(n, s), "even:s=t>=2"};
    }
    if (s == 1) return {Count(h) * binom(n, t) + Count(n - 1) * binom(h - 1, t), "even:s=1,t>=2"};
    if (t == 1) return {Count(h) * binom(n, s) + Count(n - 1) * binom(h - 1, s), "even:s>=2,t=1"};
    return {binom(h - 1, t) * binom(n, s) + binom(h - 1, s) * binom(n, t), "even:s,t>=2"};
}

Count ex_edges_matching(long long n, long long k) { return ex_edges_matching_detail(n, k).value; }
Count ex_cliques_matching(long long n, long long k, long long s) {
    return ex_cliques_matching_detail(n, k, s).value;
}
Count ex_cliquestar_matching(long long n, long long k, long long s, long long t) {
    return ex_cliquestar_matching_detail(n, k, s, t).value;
}
Count ex_bip_biclique_matching(long long n, long long k, long long s, long long t) {
    return ex_bip_biclique_matching_detail(n, k, s, t).value;
}
Count ex_edges_linforest(long long n, long long k) {
    return ex_edges_linforest_detail(n, k).value;
}
Count ex_cliques_linforest(long long n, long long k, long long s) {
    return ex_cliques_linforest_detail(n, k, s).value;
}
Count ex_cliquestar_linforest(long long n, long long k, long long s, long long t) {
    return ex_cliquestar_linforest_detail(n, k, s, t).value;
}
Count ex_bip_biclique_linforest(long long n, long long k, long long s, long long t) {
    return ex_bip_biclique_linforest_detail(n, k, s, t).value;
}

namespace {

void check_H_params(long long n, long long k, long long m) {
    if (k < 1 || k > n || m < (k + 2) / 2 || m > k) {
        range_error("H(n,k,m) closed form", "ceil((k+1)/2) <= m <= k <= n");
    }
}

}  // namespace

Count count_H_cliques_closed(long long n, long long k, long long m, long long s) {
    check_H_params(n, k, m);
    if (s < 1) range_error("count_H_cliques_closed", "s >= 1");
    return binom(m, s) + Count(n - m) * binom(k - m, s - 1);
}

Count count_H_cliquestars_closed(long long n, long long k, long long m, long long s, long long t) {
    check_H_params(n, k, m);
    if (s < 1 || t < 1) range_error("count_H_cliquestars_closed", "s,t >= 1");
    Count f1 = binom(k - m, s) * binom(n - s, t);
    Count f2 = Count(n - m) * binom(k - m, s - 1) * binom(k - m - s + 1, t);
    Count f3 = (binom(m, s) - binom(k - m, s)) * binom(m - s, t);
    return f1 + f2 + f3;
}

Count f_bip_closed(long long n, long long kceil, long long x, long long s, long long t) {
    if (x < 0 || x > kceil || kceil > n) range_error("f_bip_closed", "0 <= x <= kceil <= n");
    if (s < 1 || t < 1) range_error("f_bip_closed", "s,t >= 1");
    return binom(x, s) * binom(n, t) + binom(n, s) * binom(kceil - x, t) -
           binom(x, s) * binom(kceil - x, t);
}

}  // namespace linf
