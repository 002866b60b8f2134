#pragma once

#include "ffgrid/caps.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ffgrid {

using Edge = std::pair<int, int>;
using VertexBits = boost::dynamic_bitset<std::uint64_t>;

// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
// Adjacency is kept twice: packed bit rows for set operations and sorted
// neighbour lists for scans.
class Graph {
public:
    Graph() = default;

    // Edgeless graph on n vertices.
    explicit Graph(int n, const Caps& caps = {});

    // Duplicate edges are merged. Loops or out-of-range endpoints throw.
    Graph(int n, std::span<const Edge> edges, const Caps& caps = {});

    int size() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const VertexBits& row(int v) const { return rows_[v]; }
    std::span<const int> neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    std::size_t edge_count() const noexcept { return edge_count_; }
    int max_degree() const noexcept;

    // Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    // Subgraph induced by `vertices`; vertex i of the result is vertices[i].
    Graph induced(std::span<const int> vertices) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<VertexBits> rows_;
    std::vector<std::vector<int>> adj_;
};

// A total order on the vertices of a graph. `scan()[r]` is the vertex visited
// at step r; `rank(v)` is the inverse.
class Ordering {
public:
    Ordering() = default;

    static Ordering identity(int n);
    // Throws unless `scan` is a permutation of 0..n-1.
    static Ordering from_scan(std::vector<int> scan);
    static Ordering from_ranks(std::vector<int> ranks);

    int size() const noexcept { return static_cast<int>(scan_.size()); }
    int rank(int v) const { return rank_[v]; }
    int at(int r) const { return scan_[r]; }
    bool precedes(int u, int v) const { return rank_[u] < rank_[v]; }

    std::span<const int> scan() const noexcept { return scan_; }
    std::span<const int> ranks() const noexcept { return rank_; }

    Ordering reversed() const;

    bool operator==(const Ordering& other) const = default;

private:
    std::vector<int> scan_;
    std::vector<int> rank_;
};

// The pair (G, sigma).
class OrderedGraph {
public:
    explicit OrderedGraph(Graph graph);
    OrderedGraph(Graph graph, Ordering order);

    const Graph& graph() const noexcept { return graph_; }
    const Ordering& order() const noexcept { return order_; }
    int size() const noexcept { return graph_.size(); }

    bool operator==(const OrderedGraph& other) const = default;

private:
    Graph graph_;
    Ordering order_;
};

// G box H on row-major indices: vertex (g, h) has index g * cols + h.
class ProductGraph {
public:
    ProductGraph(Graph base, int rows, int cols);

    const Graph& graph() const noexcept { return base_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    int size() const noexcept { return base_.size(); }

    int index(int g, int h) const noexcept { return g * cols_ + h; }
    std::pair<int, int> coords(int v) const noexcept { return {v / cols_, v % cols_}; }

private:
    Graph base_;
    int rows_;
    int cols_;
};

ProductGraph cartesian_product(const Graph& g, const Graph& h, const Caps& caps = {});

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

// Exact oracles. Both fail with CapExceeded above their size cap.
int independence_number(const Graph& g, const Caps& caps = {});
int chromatic_number(const Graph& g, const Caps& caps = {});

} // namespace ffgrid
