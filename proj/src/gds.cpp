#include "ffgrid/gds.hpp"

#include "ffgrid/error.hpp"
#include "ffgrid/ordering.hpp"

#include <algorithm>
#include <numeric>

namespace ffgrid {

bool is_gds(const Graph& g, const Ordering& order, const Coloring& target, std::span<const int> domain)
{
    const Precoloring pre = Precoloring::restrict(target, domain);
    try {
        return first_fit_with_precoloring(g, order, pre) == target;
    } catch (const Error&) {
        return false;
    }
}

GdsCertificate certify_gds(const Graph& g, const Ordering& order, const Coloring& target, std::vector<int> domain,
                           std::string method, SearchStats stats)
{
    std::sort(domain.begin(), domain.end());
    GdsCertificate cert;
    cert.verified = is_gds(g, order, target, domain);
    ++stats.replays;
    cert.pinned = Precoloring::restrict(target, domain);
    cert.domain = std::move(domain);
    cert.target = target;
    cert.k = target.num_colors();
    cert.method = std::move(method);
    cert.stats = stats;
    return cert;
}

namespace {

std::vector<VertexBits> to_bits(const std::vector<std::vector<int>>& family, int universe)
{
    std::vector<VertexBits> out;
    out.reserve(family.size());
    for (const auto& set : family) {
        VertexBits bits(universe);
        for (int v : set)
            bits.set(v);
        out.push_back(std::move(bits));
    }
    return out;
}

int packing(const std::vector<VertexBits>& sets, const std::vector<int>& live, const VertexBits& excluded)
{
    std::vector<std::pair<std::size_t, int>> by_size;
    by_size.reserve(live.size());
    for (int i : live)
        by_size.emplace_back((sets[i] - excluded).count(), i);
    std::sort(by_size.begin(), by_size.end());
    VertexBits used(excluded.size());
    int count = 0;
    for (auto [size, i] : by_size) {
        VertexBits eff = sets[i] - excluded;
        if (!eff.intersects(used)) {
            used |= eff;
            ++count;
        }
    }
    return count;
}

class HittingSearch {
public:
    HittingSearch(const std::vector<VertexBits>& sets, int universe, SearchStats& stats)
        : sets_(sets), universe_(universe), stats_(stats)
    {
    }

    std::vector<int> run(std::vector<int> upper)
    {
        best_ = std::move(upper);
        std::vector<int> live(sets_.size());
        std::iota(live.begin(), live.end(), 0);
        VertexBits excluded(universe_);
        search(live, excluded);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void search(const std::vector<int>& live, VertexBits& excluded)
    {
        ++stats_.nodes;
        if (live.empty()) {
            if (chosen_.size() < best_.size())
                best_ = chosen_;
            return;
        }
        if (chosen_.size() + packing(sets_, live, excluded) >= best_.size())
            return;

        std::vector<int> freq(universe_, 0);
        for (int i : live) {
            const VertexBits eff = sets_[i] - excluded;
            for (auto v = eff.find_first(); v != VertexBits::npos; v = eff.find_next(v))
                ++freq[v];
        }
        const int pick = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());

        std::vector<int> rest;
        rest.reserve(live.size());
        for (int i : live)
            if (!sets_[i].test(pick))
                rest.push_back(i);
        chosen_.push_back(pick);
        search(rest, excluded);
        chosen_.pop_back();

        excluded.set(pick);
        const bool feasible = std::none_of(live.begin(), live.end(),
                                           [&](int i) { return sets_[i].is_subset_of(excluded); });
        if (feasible)
            search(live, excluded);
        excluded.reset(pick);
    }

    const std::vector<VertexBits>& sets_;
    int universe_;
    SearchStats& stats_;
    std::vector<int> chosen_;
    std::vector<int> best_;
};

} // namespace

std::vector<int> greedy_hitting_set(const std::vector<std::vector<int>>& family, int universe)
{
    const auto sets = to_bits(family, universe);
    std::vector<char> hit(sets.size(), 0);
    std::size_t remaining = sets.size();
    std::vector<int> chosen;
    while (remaining > 0) {
        std::vector<int> freq(universe, 0);
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (!hit[i])
                for (auto v = sets[i].find_first(); v != VertexBits::npos; v = sets[i].find_next(v))
                    ++freq[v];
        const int pick = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());
        if (freq[pick] == 0)
            throw Error("hitting set: family contains an empty set");
        chosen.push_back(pick);
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (!hit[i] && sets[i].test(pick)) {
                hit[i] = 1;
                --remaining;
            }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

int disjoint_packing_bound(const std::vector<std::vector<int>>& family, int universe)
{
    const auto sets = to_bits(family, universe);
    std::vector<int> live(sets.size());
    std::iota(live.begin(), live.end(), 0);
    return packing(sets, live, VertexBits(universe));
}

std::vector<int> minimum_hitting_set(const std::vector<std::vector<int>>& family, int universe, SearchStats& stats)
{
    stats.family_size = family.size();
    if (family.empty())
        return {};
    const auto sets = to_bits(family, universe);
    stats.lower_bound = disjoint_packing_bound(family, universe);
    return HittingSearch(sets, universe, stats).run(greedy_hitting_set(family, universe));
}

GdsCertificate hitting_set_gds(const Graph& g, const Ordering& order, const Coloring& c, HittingMode mode,
                               const Caps& caps)
{
    const auto family = descent_family(find_descents(g, order, c));
    SearchStats stats;
    stats.family_size = family.size();
    std::vector<int> domain;
    std::string method;
    if (mode == HittingMode::exact) {
        if (family.size() > caps.hitting_family)
            throw CapExceeded("exact hitting set over " + std::to_string(family.size()) + " descents",
                              "hitting_family");
        domain = minimum_hitting_set(family, g.size(), stats);
        method = "hitting-exact";
    } else {
        domain = family.empty() ? std::vector<int>{} : greedy_hitting_set(family, g.size());
        method = "hitting-greedy";
    }
    auto cert = certify_gds(g, order, c, std::move(domain), std::move(method), stats);
    if (!cert.verified)
        throw TheoremViolation("a hitting set of the descent family failed to reproduce the coloring");
    return cert;
}

GdsCertificate minimum_gds(const Graph& g, const Ordering& order, const Coloring& c, const Caps& caps,
                           MinimumGdsOptions options)
{
    const int n = g.size();
    if (n > caps.minimum_gds)
        throw CapExceeded("minimum GDS search over " + std::to_string(n) + " vertices", "minimum_gds");
    if (!is_proper(g, c))
        throw Error("improper coloring");
    SearchStats stats;
    int floor = 0;
    if (options.descent_floor) {
        const auto family = descent_family(find_descents(g, order, c));
        stats.family_size = family.size();
        floor = disjoint_packing_bound(family, n);
    }
    stats.lower_bound = floor;

    std::vector<int> pick;
    for (int size = floor; size <= n; ++size) {
        // combinations of `size` vertices in lexicographic order
        pick.resize(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            ++stats.replays;
            if (is_gds(g, order, c, pick))
                return certify_gds(g, order, c, pick, "exhaustive", stats);
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    throw Error("no subset reproduces the coloring");
}

QuasiLexGdsCheck check_quasi_lex_gds_equivalence(const OrderedGraph& g, const OrderedGraph& h, const Coloring& c,
                                                 std::span<const int> domain, const Caps& caps)
{
    const ProductGraph product = cartesian_product(g.graph(), h.graph(), caps);
    const Graph& pg = product.graph();
    const ProductOrdering lex = lex_ordering(g, h);
    const Coloring lex_ff = first_fit(pg, lex.order);

    QuasiLexGdsCheck out;
    out.gds_under_lex = is_gds(pg, lex.order, c, domain);
    out.orderings = for_each_quasi_lex(
        g, h, UINT64_MAX,
        [&](const ProductOrdering& tau) {
            if (first_fit(pg, tau.order) != lex_ff) {
                out.colorings_identical = false;
                out.failures.push_back("first-fit differs under " + format_ordering(tau.order));
            }
            if (is_gds(pg, tau.order, c, domain) != out.gds_under_lex) {
                out.gds_invariant = false;
                out.failures.push_back("GDS status differs under " + format_ordering(tau.order));
            }
        },
        caps);
    return out;
}

} // namespace ffgrid
