#include "ffgrid/descent.hpp"

#include "ffgrid/error.hpp"

#include <algorithm>
#include <climits>
#include <map>

namespace ffgrid {

std::vector<Descent> find_descents(const Graph& g, const Ordering& order, const Coloring& c)
{
    if (order.size() != g.size())
        throw Error("ordering does not cover the graph");
    if (!is_proper(g, c))
        throw Error("improper coloring");
    std::vector<Descent> out;
    // earliest[x] = smallest rank among neighbours of colour x
    std::vector<int> earliest(c.num_colors() + 1);
    for (int v : order.scan()) {
        const int y = c.color(v);
        const int rv = order.rank(v);
        std::fill(earliest.begin(), earliest.begin() + y, INT_MAX);
        for (int u : g.neighbors(v)) {
            const int x = c.color(u);
            if (x < y)
                earliest[x] = std::min(earliest[x], order.rank(u));
        }
        for (int x = 1; x < y; ++x) {
            if (earliest[x] < rv)
                continue;
            Descent d{v, x, y, {}};
            for (int u : g.neighbors(v))
                if (c.color(u) == x)
                    d.witnesses.push_back(u);
            out.push_back(std::move(d));
        }
    }
    return out;
}

bool is_descent_free(const Graph& g, const Ordering& order, const Coloring& c)
{
    return find_descents(g, order, c).empty();
}

std::vector<std::vector<int>> descent_family(std::span<const Descent> descents)
{
    std::vector<std::vector<int>> family;
    std::map<std::vector<int>, bool> seen;
    for (const auto& d : descents) {
        std::vector<int> set = d.witnesses;
        set.push_back(d.vertex);
        std::sort(set.begin(), set.end());
        if (seen.emplace(set, true).second)
            family.push_back(std::move(set));
    }
    return family;
}

TheoremCheck check_descent_free_theorem(const Graph& g, const Ordering& order, const Coloring& c)
{
    TheoremCheck out;
    if (!is_descent_free(g, order, c)) {
        out.detail = "coloring has descents; hypothesis not met";
        return out;
    }
    out.applicable = true;
    const Coloring replay = first_fit(g, order);
    out.holds = replay == c;
    if (!out.holds) {
        for (int v = 0; v < g.size(); ++v)
            if (replay.color(v) != c.color(v)) {
                out.detail = "vertex " + std::to_string(v) + ": descent-free colour " + std::to_string(c.color(v))
                             + ", first-fit colour " + std::to_string(replay.color(v));
                break;
            }
    }
    return out;
}

} // namespace ffgrid
