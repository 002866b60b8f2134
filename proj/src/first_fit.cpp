#include "ffgrid/first_fit.hpp"

#include "ffgrid/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace ffgrid {

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors))
{
    for (int c : colors_) {
        if (c < 1)
            throw Error("colours must be positive");
        k_ = std::max(k_, c);
    }
}

std::vector<std::vector<int>> Coloring::classes() const
{
    std::vector<std::vector<int>> out(k_);
    for (int v = 0; v < size(); ++v)
        out[colors_[v] - 1].push_back(v);
    return out;
}

bool Coloring::uses_every_color() const
{
    std::vector<char> seen(k_ + 1, 0);
    for (int c : colors_)
        seen[c] = 1;
    return std::all_of(seen.begin() + 1, seen.end(), [](char s) { return s != 0; });
}

bool is_proper(const Graph& g, const Coloring& c)
{
    if (c.size() != g.size())
        return false;
    for (auto [u, v] : g.edges())
        if (c.color(u) == c.color(v))
            return false;
    return true;
}

Precoloring Precoloring::restrict(const Coloring& c, std::span<const int> domain)
{
    Precoloring pre(c.size());
    for (int v : domain)
        pre.pin(v, c.color(v));
    return pre;
}

void Precoloring::pin(int v, int color)
{
    if (color < 1)
        throw Error("pinned colours must be positive");
    colors_.at(v) = color;
}

std::vector<int> Precoloring::domain() const
{
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (colors_[v] != 0)
            out.push_back(v);
    return out;
}

namespace {

// Smallest colour absent from the coloured neighbours of v. `stamp` marks
// colours seen in this call; it is reused across calls to avoid clearing.
int smallest_free(const Graph& g, int v, const std::vector<int>& color, std::vector<int>& stamp, int tick)
{
    for (int u : g.neighbors(v)) {
        const int c = color[u];
        if (c != 0 && c < static_cast<int>(stamp.size()))
            stamp[c] = tick;
    }
    int c = 1;
    while (c < static_cast<int>(stamp.size()) && stamp[c] == tick)
        ++c;
    return c;
}

Coloring greedy_scan(const Graph& g, const Ordering& order, std::vector<int> color, int top)
{
    if (order.size() != g.size())
        throw Error("ordering does not cover the graph");
    // a fresh colour never exceeds max(top, degree + 1)
    std::vector<int> stamp(std::max(top, g.max_degree() + 1) + 2, -1);
    int tick = 0;
    for (int v : order.scan())
        if (color[v] == 0)
            color[v] = smallest_free(g, v, color, stamp, tick++);
    return Coloring(std::move(color));
}

} // namespace

Coloring first_fit(const Graph& g, const Ordering& order)
{
    return greedy_scan(g, order, std::vector<int>(g.size(), 0), 0);
}

Coloring first_fit_with_precoloring(const Graph& g, const Ordering& order, const Precoloring& pre)
{
    if (pre.size() != g.size())
        throw Error("precoloring size does not match graph");
    std::vector<int> color(g.size(), 0);
    int top = 0;
    for (int v : pre.domain()) {
        color[v] = pre.color(v);
        top = std::max(top, color[v]);
        for (int u : g.neighbors(v))
            if (pre.color(u) == color[v])
                throw Error("precoloring conflict at vertices " + std::to_string(v) + " and " + std::to_string(u));
    }
    Coloring out = greedy_scan(g, order, std::move(color), top);
    // A scanned vertex only takes colours absent from every coloured neighbour,
    // pinned ones included, so this cannot fire; kept as a postcondition.
    if (!is_proper(g, out))
        throw Error("greedy/pin collision");
    return out;
}

int grundy_number(const Graph& g, const Caps& caps)
{
    if (g.size() > caps.grundy)
        throw CapExceeded("grundy number: instance too large (" + std::to_string(g.size()) + " vertices)", "grundy");
    if (g.size() <= caps.grundy_exhaustive)
        return grundy_number_by_orderings(g, caps);
    return grundy_number_by_partitions(g, caps);
}

int grundy_number_by_orderings(const Graph& g, const Caps& caps)
{
    if (g.size() > caps.grundy_exhaustive)
        throw CapExceeded("grundy number by orderings: " + std::to_string(g.size()) + " vertices",
                          "grundy_exhaustive");
    if (g.empty())
        return 0;
    const int ceiling = g.max_degree() + 1;
    std::vector<int> scan(g.size());
    std::iota(scan.begin(), scan.end(), 0);
    int best = 0;
    do {
        best = std::max(best, first_fit(g, Ordering::from_scan(scan)).num_colors());
        if (best == ceiling)
            break;
    } while (std::next_permutation(scan.begin(), scan.end()));
    return best;
}

int grundy_number_by_partitions(const Graph& g, const Caps& caps)
{
    // A First-Fit colouring of a vertex set S is a partition I_1, ..., I_k of S
    // into independent sets where every vertex of I_j (j > 1) has a neighbour
    // in I_1. Peeling I_1 leaves a First-Fit colouring of S \ I_1, so
    //   best[S] = 1 + max best[S \ I] over independent I dominating S \ I.
    if (g.size() > caps.grundy || g.size() > 24)
        throw CapExceeded("grundy number: instance too large (" + std::to_string(g.size()) + " vertices)", "grundy");
    const int n = g.size();
    if (n == 0)
        return 0;
    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            adj[v] |= std::uint32_t{1} << u;

    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint8_t> best(std::size_t{full} + 1, 0);
    for (std::uint32_t set = 1; set <= full; ++set) {
        int top = 0;
        for (std::uint32_t part = set; part; part = (part - 1) & set) {
            bool independent = true;
            std::uint32_t dominated = 0;
            for (auto rest = part; rest; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                if (adj[v] & part) {
                    independent = false;
                    break;
                }
                dominated |= adj[v];
            }
            if (!independent)
                continue;
            const std::uint32_t remainder = set & ~part;
            if ((remainder & ~dominated) != 0)
                continue;
            top = std::max(top, 1 + best[remainder]);
        }
        best[set] = static_cast<std::uint8_t>(top);
    }
    return best[full];
}

GrundyWitness grundy_witness_km_kn(int m, int n)
{
    if (m < 1 || m >= n)
        throw Error("grundy witness needs 1 <= m < n");
    const Graph product = cartesian_product(complete_graph(m), complete_graph(n)).graph();
    std::vector<int> scan;
    scan.reserve(m * n);
    if (n > 1) {
        // class-by-class over the cyclic pattern on columns 0..n-2
        for (int c = 1; c <= n - 1; ++c)
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n - 1; ++j) {
                    int pattern = (i + j + 1) % (n - 1);
                    if (pattern == 0)
                        pattern = n - 1;
                    if (pattern == c)
                        scan.push_back(i * n + j);
                }
    }
    for (int i = 0; i < m; ++i)
        scan.push_back(i * n + n - 1);
    Ordering order = Ordering::from_scan(std::move(scan));
    Coloring coloring = first_fit(product, order);
    return {std::move(order), std::move(coloring)};
}

std::string format_colors(const Coloring& c)
{
    std::ostringstream out;
    out << "colors:";
    for (int x : c.colors())
        out << ' ' << x;
    return out.str();
}

std::string format_grid(const Coloring& c, int rows, int cols)
{
    if (rows * cols != c.size())
        throw Error("grid shape does not match colouring");
    std::ostringstream out;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j)
            out << (j ? "," : "") << c.color(i * cols + j);
        out << '\n';
    }
    return out.str();
}

} // namespace ffgrid
