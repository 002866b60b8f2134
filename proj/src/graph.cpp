#include "ffgrid/graph.hpp"

#include "ffgrid/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace ffgrid {

namespace {

void check_vertex_cap(int n, const Caps& caps)
{
    if (n < 0)
        throw Error("negative vertex count");
    if (n > caps.max_vertices)
        throw CapExceeded("graph on " + std::to_string(n) + " vertices", "max_vertices");
}

bool is_permutation_of_range(const std::vector<int>& values)
{
    std::vector<char> seen(values.size(), 0);
    for (int v : values) {
        if (v < 0 || v >= static_cast<int>(values.size()) || seen[v])
            return false;
        seen[v] = 1;
    }
    return true;
}

} // namespace

Graph::Graph(int n, const Caps& caps) : Graph(n, std::span<const Edge>{}, caps) {}

Graph::Graph(int n, std::span<const Edge> edges, const Caps& caps) : n_(n)
{
    check_vertex_cap(n, caps);
    rows_.assign(n, VertexBits(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v)
            throw Error("loop at vertex " + std::to_string(u));
        if (!rows_[u].test(v)) {
            rows_[u].set(v);
            rows_[v].set(u);
            ++edge_count_;
        }
    }
    adj_.resize(n);
    for (int v = 0; v < n; ++v)
        for (auto u = rows_[v].find_first(); u != VertexBits::npos; u = rows_[v].find_next(u))
            adj_[v].push_back(static_cast<int>(u));
}

int Graph::max_degree() const noexcept
{
    int best = 0;
    for (const auto& a : adj_)
        best = std::max(best, static_cast<int>(a.size()));
    return best;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(std::span<const int> vertices) const
{
    std::vector<int> local(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int u : adj_[vertices[i]])
            if (local[u] > static_cast<int>(i))
                es.emplace_back(static_cast<int>(i), local[u]);
    return Graph(static_cast<int>(vertices.size()), es);
}

Ordering Ordering::identity(int n)
{
    std::vector<int> scan(n);
    std::iota(scan.begin(), scan.end(), 0);
    return from_scan(std::move(scan));
}

Ordering Ordering::from_scan(std::vector<int> scan)
{
    if (!is_permutation_of_range(scan))
        throw Error("ordering is not a permutation of 0.." + std::to_string(scan.size() - 1));
    Ordering o;
    o.rank_.resize(scan.size());
    for (std::size_t r = 0; r < scan.size(); ++r)
        o.rank_[scan[r]] = static_cast<int>(r);
    o.scan_ = std::move(scan);
    return o;
}

Ordering Ordering::from_ranks(std::vector<int> ranks)
{
    if (!is_permutation_of_range(ranks))
        throw Error("ranks are not a permutation");
    std::vector<int> scan(ranks.size());
    for (std::size_t v = 0; v < ranks.size(); ++v)
        scan[ranks[v]] = static_cast<int>(v);
    return from_scan(std::move(scan));
}

Ordering Ordering::reversed() const
{
    return from_scan(std::vector<int>(scan_.rbegin(), scan_.rend()));
}

OrderedGraph::OrderedGraph(Graph graph) : graph_(std::move(graph)), order_(Ordering::identity(graph_.size())) {}

OrderedGraph::OrderedGraph(Graph graph, Ordering order) : graph_(std::move(graph)), order_(std::move(order))
{
    if (order_.size() != graph_.size())
        throw Error("ordering has " + std::to_string(order_.size()) + " entries for a graph on "
                    + std::to_string(graph_.size()) + " vertices");
}

ProductGraph::ProductGraph(Graph base, int rows, int cols) : base_(std::move(base)), rows_(rows), cols_(cols)
{
    if (rows * cols != base_.size())
        throw Error("product dimensions do not match vertex count");
}

ProductGraph cartesian_product(const Graph& g, const Graph& h, const Caps& caps)
{
    if (g.empty() || h.empty())
        throw Error("empty factor");
    const int rows = g.size();
    const int cols = h.size();
    check_vertex_cap(rows * cols, caps);
    std::vector<Edge> es;
    es.reserve(rows * h.edge_count() + cols * g.edge_count());
    for (int a = 0; a < rows; ++a)
        for (auto [x, y] : h.edges())
            es.emplace_back(a * cols + x, a * cols + y);
    for (auto [a, b] : g.edges())
        for (int x = 0; x < cols; ++x)
            es.emplace_back(a * cols + x, b * cols + x);
    return ProductGraph(Graph(rows * cols, es, caps), rows, cols);
}

Graph complete_graph(int n)
{
    if (n < 1)
        throw Error("complete graph needs at least one vertex");
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            es.emplace_back(u, v);
    return Graph(n, es);
}

Graph path_graph(int n)
{
    if (n < 1)
        throw Error("path needs at least one vertex");
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v)
        es.emplace_back(v, v + 1);
    return Graph(n, es);
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw Error("cycle needs at least three vertices");
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v)
        es.emplace_back(v, (v + 1) % n);
    return Graph(n, es);
}

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g)
{
    std::vector<std::uint32_t> masks(g.size(), 0);
    for (int v = 0; v < g.size(); ++v)
        for (int u : g.neighbors(v))
            masks[v] |= std::uint32_t{1} << u;
    return masks;
}

void max_independent(const std::vector<std::uint32_t>& adj, std::uint32_t candidates, int size, int& best)
{
    if (candidates == 0) {
        best = std::max(best, size);
        return;
    }
    if (size + std::popcount(candidates) <= best)
        return;
    // branch on the candidate with most candidate neighbours
    int pick = -1, pick_deg = -1;
    for (auto rest = candidates; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        int d = std::popcount(adj[v] & candidates);
        if (d > pick_deg) {
            pick = v;
            pick_deg = d;
        }
    }
    const std::uint32_t bit = std::uint32_t{1} << pick;
    max_independent(adj, candidates & ~bit & ~adj[pick], size + 1, best);
    if (pick_deg > 0)
        max_independent(adj, candidates & ~bit, size, best);
}

bool colorable(const Graph& g, const std::vector<int>& order, std::vector<int>& color, std::size_t i, int k, int used)
{
    if (i == order.size())
        return true;
    const int v = order[i];
    for (int c = 1; c <= std::min(k, used + 1); ++c) {
        bool free = true;
        for (int u : g.neighbors(v))
            if (color[u] == c) {
                free = false;
                break;
            }
        if (!free)
            continue;
        color[v] = c;
        if (colorable(g, order, color, i + 1, k, std::max(used, c)))
            return true;
    }
    color[v] = 0;
    return false;
}

} // namespace

int independence_number(const Graph& g, const Caps& caps)
{
    if (g.size() > caps.independence || g.size() > 31)
        throw CapExceeded("independence number: instance too large (" + std::to_string(g.size()) + " vertices)",
                          "independence");
    int best = 0;
    const std::uint32_t all = g.size() == 0 ? 0 : (std::uint32_t{1} << g.size()) - 1;
    max_independent(adjacency_masks(g), all, 0, best);
    return best;
}

int chromatic_number(const Graph& g, const Caps& caps)
{
    if (g.size() > caps.chromatic)
        throw CapExceeded("chromatic number: instance too large (" + std::to_string(g.size()) + " vertices)",
                          "chromatic");
    if (g.empty())
        return 0;
    std::vector<int> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(g.size(), 0);
    for (int k = 1;; ++k) {
        std::fill(color.begin(), color.end(), 0);
        if (colorable(g, order, color, 0, k, 0))
            return k;
    }
}

} // namespace ffgrid
