#pragma once

#include <string>

#include "linf/bigint.hpp"

namespace linf {

// C(a,b) with the zero convention: 0 whenever b < 0, a < 0 or b > a. The
// displayed extremal formulas rely on this to stay total.
Count binom(long long a, long long b);

struct FormulaResult {
    Count value;
    std::string branch;  // which branch of the max (or which case) won
};

// Matching-forbidding family M_{k+1} (prior results, used as cross-checks).
FormulaResult ex_edges_matching_detail(long long n, long long k);
FormulaResult ex_cliques_matching_detail(long long n, long long k, long long s);
FormulaResult ex_cliquestar_matching_detail(long long n, long long k, long long s, long long t);
FormulaResult ex_bip_biclique_matching_detail(long long n, long long k, long long s, long long t);

// Linear-forest family L_{n,k}.
FormulaResult ex_edges_linforest_detail(long long n, long long k);
FormulaResult ex_cliques_linforest_detail(long long n, long long k, long long s);
FormulaResult ex_cliquestar_linforest_detail(long long n, long long k, long long s, long long t);
FormulaResult ex_bip_biclique_linforest_detail(long long n, long long k, long long s, long long t);

Count ex_edges_matching(long long n, long long k);
Count ex_cliques_matching(long long n, long long k, long long s);
Count ex_cliquestar_matching(long long n, long long k, long long s, long long t);
Count ex_bip_biclique_matching(long long n, long long k, long long s, long long t);
Count ex_edges_linforest(long long n, long long k);
Count ex_cliques_linforest(long long n, long long k, long long s);
Count ex_cliquestar_linforest(long long n, long long k, long long s, long long t);
Count ex_bip_biclique_linforest(long long n, long long k, long long s, long long t);

// Proof-level intermediates.
// f(m) = C(m,s) + (n-m) C(k-m,s-1): s-cliques of H(n,k,m).
Count count_H_cliques_closed(long long n, long long k, long long m, long long s);
// f1+f2+f3: the three clique-star classes of H(n,k,m).
Count count_H_cliquestars_closed(long long n, long long k, long long m, long long s, long long t);
// f_{s,t}(x) = C(x,s)C(n,t) + C(n,s)C(kceil-x,t) - C(x,s)C(kceil-x,t) on G*.
Count f_bip_closed(long long n, long long kceil, long long x, long long s, long long t);

}  // namespace linf
