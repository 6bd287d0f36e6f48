#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linf/errors.hpp"

namespace linf {

// Nothing in the toolkit materializes larger hosts: formula evaluation at
// large n never builds a graph.
inline constexpr int kMaxVertices = 64;

// Labeled simple graph on vertices 1..n with one adjacency bitrow per vertex
// (bit v-1 of row(u) set iff uv is an edge). Symmetry and irreflexivity are
// maintained by the mutators; there is no way to store a loop or a one-sided
// edge.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    // Neighborhood of v as a bitmask over 0-based vertex indices.
    std::uint64_t row(int v) const;
    int degree(int v) const;

    std::vector<std::pair<int, int>> edges() const;  // lexicographic, u < v

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;

    void check_vertex(int v) const;
};

Graph complete_graph(int n);  // n >= 1
Graph empty_graph(int n);     // n >= 0

// Vertex set [n1+n2] with g2's labels offset by n1 and all cross pairs added.
Graph join(const Graph& g1, const Graph& g2);
// Same labeling, no cross edges.
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Bipartite host with parts X = {x_1..x_nx} and Y = {y_1..y_ny}; the
// biadjacency representation cannot encode an intra-part edge.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(int nx, int ny);

    int left_size() const { return nx_; }
    int right_size() const { return ny_; }
    int edge_count() const;

    bool has_edge(int x, int y) const;
    void add_edge(int x, int y);
    void remove_edge(int x, int y);

    // Neighbors of x_x as a bitmask over 0-based y indices, and vice versa.
    std::uint64_t x_row(int x) const;
    std::uint64_t y_col(int y) const;

    // The same graph with X placed at labels 1..nx and Y at nx+1..nx+ny.
    Graph to_graph() const;

    bool operator==(const BipartiteGraph& o) const {
        return nx_ == o.nx_ && ny_ == o.ny_ && rows_ == o.rows_;
    }
    bool operator!=(const BipartiteGraph& o) const { return !(*this == o); }

private:
    int nx_ = 0, ny_ = 0;
    std::vector<std::uint64_t> rows_;

    void check_pair(int x, int y) const;
};

// graph6 interchange, bit-exact with the de-facto standard format: offset-63
// printable bytes, 6-bit groups MSB first, upper triangle column-major.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

}  // namespace linf
