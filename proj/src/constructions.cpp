#include "linf/constructions.hpp"

#include <stdexcept>
#include <string>

namespace linf {

Graph build_H(int n, int k, int m) {
    int m_low = (k + 2) / 2;  // ceil((k+1)/2)
    if (k < 1 || k > n || m < m_low || m > k) {
        throw std::invalid_argument("build_H: need ceil((k+1)/2) <= m <= k <= n, got n=" +
                                    std::to_string(n) + " k=" + std::to_string(k) +
                                    " m=" + std::to_string(m));
    }
    Graph g(n);
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v) g.add_edge(u, v);
    for (int c = 1; c <= k - m; ++c)
        for (int b = m + 1; b <= n; ++b) g.add_edge(c, b);
    return g;
}

Graph build_extremal_unrestricted(int n, int k, UnrestrictedVariant variant) {
    if (k < 1 || k > n - 1) {
        throw std::invalid_argument("build_extremal_unrestricted: need 1 <= k <= n-1");
    }
    Graph g(n);
    if (variant == UnrestrictedVariant::clique) {
        for (int u = 1; u <= k; ++u)
            for (int v = u + 1; v <= k; ++v) g.add_edge(u, v);
        return g;
    }
    int q = k % 2 == 1 ? (k - 1) / 2 : k / 2 - 1;
    for (int u = 1; u <= q; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    if (k % 2 == 0) g.add_edge(q + 1, q + 2);
    return g;
}

BipartiteGraph build_extremal_bipartite(int n, int k) {
    if (k < 1 || 2 * n < k + 1 || n < k / 2) {
        throw std::invalid_argument("build_extremal_bipartite: need k >= 1, 2n >= k+1 and n >= ceil((k-1)/2)");
    }
    BipartiteGraph bg(n, n);
    if (k % 2 == 1) {
        for (int x = 1; x <= (k - 1) / 2; ++x)
            for (int y = 1; y <= n; ++y) bg.add_edge(x, y);
    } else {
        int q = k / 2 - 1;
        for (int x = 1; x <= q; ++x)
            for (int y = 1; y <= n; ++y) bg.add_edge(x, y);
        for (int x = q + 1; x <= n; ++x) bg.add_edge(x, 1);
    }
    return bg;
}

BipartiteGraph build_gstar(int n, int kceil, int x) {
    if (x < 0 || x > kceil || kceil > n) {
        throw std::invalid_argument("build_gstar: need 0 <= x <= kceil <= n");
    }
    BipartiteGraph bg(n, n);
    for (int i = 1; i <= x; ++i)
        for (int y = 1; y <= n; ++y) bg.add_edge(i, y);
    for (int y = 1; y <= kceil - x; ++y)
        for (int i = 1; i <= n; ++i) bg.add_edge(i, y);
    return bg;
}

}  // namespace linf
