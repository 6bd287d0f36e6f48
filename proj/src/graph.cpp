#include "linf/graph.hpp"

#include <bit>
#include <stdexcept>

namespace linf {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    if (n > kMaxVertices) {
        throw CapExceededError("Graph: vertex count " + std::to_string(n) + " exceeds cap " +
                               std::to_string(kMaxVertices));
    }
    adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_) {
        throw std::invalid_argument("Graph: vertex " + std::to_string(v) + " outside 1.." +
                                    std::to_string(n_));
    }
}

std::uint64_t Graph::row(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v - 1)];
}

int Graph::degree(int v) const { return std::popcount(row(v)); }

int Graph::edge_count() const {
    int twice = 0;
    for (std::uint64_t r : adj_) twice += std::popcount(r);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (adj_[static_cast<std::size_t>(u - 1)] >> (v - 1)) & 1;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    adj_[static_cast<std::size_t>(u - 1)] |= 1ull << (v - 1);
    adj_[static_cast<std::size_t>(v - 1)] |= 1ull << (u - 1);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return;
    adj_[static_cast<std::size_t>(u - 1)] &= ~(1ull << (v - 1));
    adj_[static_cast<std::size_t>(v - 1)] &= ~(1ull << (u - 1));
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u) {
        std::uint64_t above = adj_[static_cast<std::size_t>(u - 1)] >> u << u;
        while (above) {
            int v = std::countr_zero(above) + 1;
            above &= above - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be at least 1");
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph join(const Graph& g1, const Graph& g2) {
    int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    Graph g = disjoint_union(g1, g2);
    for (int u = 1; u <= n1; ++u)
        for (int v = n1 + 1; v <= n1 + n2; ++v) g.add_edge(u, v);
    return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    Graph g(n1 + n2);
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(u + n1, v + n1);
    return g;
}

BipartiteGraph::BipartiteGraph(int nx, int ny) : nx_(nx), ny_(ny) {
    if (nx < 0 || ny < 0) throw std::invalid_argument("BipartiteGraph: negative part size");
    if (nx > kMaxVertices || ny > kMaxVertices || nx + ny > kMaxVertices) {
        throw CapExceededError("BipartiteGraph: parts " + std::to_string(nx) + "," +
                               std::to_string(ny) + " exceed the vertex cap");
    }
    rows_.assign(static_cast<std::size_t>(nx), 0);
}

void BipartiteGraph::check_pair(int x, int y) const {
    if (x < 1 || x > nx_) {
        throw std::invalid_argument("BipartiteGraph: x vertex " + std::to_string(x) +
                                    " outside 1.." + std::to_string(nx_));
    }
    if (y < 1 || y > ny_) {
        throw std::invalid_argument("BipartiteGraph: y vertex " + std::to_string(y) +
                                    " outside 1.." + std::to_string(ny_));
    }
}

int BipartiteGraph::edge_count() const {
    int total = 0;
    for (std::uint64_t r : rows_) total += std::popcount(r);
    return total;
}

bool BipartiteGraph::has_edge(int x, int y) const {
    check_pair(x, y);
    return (rows_[static_cast<std::size_t>(x - 1)] >> (y - 1)) & 1;
}

void BipartiteGraph::add_edge(int x, int y) {
    check_pair(x, y);
    rows_[static_cast<std::size_t>(x - 1)] |= 1ull << (y - 1);
}

void BipartiteGraph::remove_edge(int x, int y) {
    check_pair(x, y);
    rows_[static_cast<std::size_t>(x - 1)] &= ~(1ull << (y - 1));
}

std::uint64_t BipartiteGraph::x_row(int x) const {
    if (x < 1 || x > nx_) throw std::invalid_argument("BipartiteGraph: x vertex out of range");
    return rows_[static_cast<std::size_t>(x - 1)];
}

std::uint64_t BipartiteGraph::y_col(int y) const {
    if (y < 1 || y > ny_) throw std::invalid_argument("BipartiteGraph: y vertex out of range");
    std::uint64_t col = 0;
    for (int x = 1; x <= nx_; ++x) {
        if ((rows_[static_cast<std::size_t>(x - 1)] >> (y - 1)) & 1) col |= 1ull << (x - 1);
    }
    return col;
}

Graph BipartiteGraph::to_graph() const {
    Graph g(nx_ + ny_);
    for (int x = 1; x <= nx_; ++x) {
        std::uint64_t r = rows_[static_cast<std::size_t>(x - 1)];
        while (r) {
            int y = std::countr_zero(r) + 1;
            r &= r - 1;
            g.add_edge(x, nx_ + y);
        }
    }
    return g;
}

}  // namespace linf
