#include "ffgrid/generators.hpp"

#include "ffgrid/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ffgrid {

Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                es.emplace_back(u, v);
    return Graph(n, es);
}

Ordering random_ordering(int n, std::mt19937_64& rng)
{
    std::vector<int> scan(n);
    std::iota(scan.begin(), scan.end(), 0);
    std::shuffle(scan.begin(), scan.end(), rng);
    return Ordering::from_scan(std::move(scan));
}

Coloring random_proper_coloring(const Graph& g, std::mt19937_64& rng, int palette)
{
    if (palette <= 0)
        palette = g.max_degree() + 1;
    std::vector<int> color(g.size(), 0);
    const Ordering visit = random_ordering(g.size(), rng);
    for (int v : visit.scan()) {
        std::vector<int> free;
        for (int c = 1; c <= palette; ++c)
            if (std::none_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](int u) { return color[u] == c; }))
                free.push_back(c);
        if (free.empty())
            free.push_back(palette + 1 + static_cast<int>(g.neighbors(v).size()));
        std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
        color[v] = free[pick(rng)];
    }
    std::vector<int> used = color;
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    for (int& c : color)
        c = static_cast<int>(std::lower_bound(used.begin(), used.end(), c) - used.begin()) + 1;
    return Coloring(std::move(color));
}

namespace {

bool connected(int n, const std::vector<Edge>& es)
{
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    int parts = n;
    for (auto [u, v] : es) {
        int a = find(u), b = find(v);
        if (a != b) {
            parent[a] = b;
            --parts;
        }
    }
    return parts == 1;
}

} // namespace

std::vector<Graph> connected_graphs(int max_n)
{
    if (max_n > 6)
        throw Error("connected_graphs enumerates up to 6 vertices");
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Edge> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                slots.emplace_back(u, v);
        std::vector<std::vector<int>> perms;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do
            perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));

        std::map<std::pair<std::size_t, std::uint32_t>, Graph> classes;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
            std::vector<Edge> es;
            for (std::size_t s = 0; s < slots.size(); ++s)
                if (mask >> s & 1)
                    es.push_back(slots[s]);
            if (!connected(n, es))
                continue;
            // canonical form: smallest relabelled edge mask
            std::uint32_t canon = UINT32_MAX;
            for (const auto& p : perms) {
                std::uint32_t m = 0;
                for (auto [u, v] : es) {
                    int a = std::min(p[u], p[v]), b = std::max(p[u], p[v]);
                    std::size_t slot = std::find(slots.begin(), slots.end(), Edge{a, b}) - slots.begin();
                    m |= std::uint32_t{1} << slot;
                }
                canon = std::min(canon, m);
            }
            classes.try_emplace({es.size(), canon}, Graph(n, es));
        }
        for (auto& [key, g] : classes)
            out.push_back(std::move(g));
    }
    return out;
}

} // namespace ffgrid
