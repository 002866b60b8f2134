// Randomised invariants over small hand-rolled instances. Each case draws
// from a fixed seed so failures reproduce.

#include "oracles.hpp"

#include "ffgrid/descent.hpp"
#include "ffgrid/first_fit.hpp"
#include "ffgrid/gds.hpp"
#include "ffgrid/generators.hpp"
#include "ffgrid/ordering.hpp"

#include <doctest.h>

#include <map>
#include <numeric>
#include <random>

using namespace ffgrid;

namespace {

struct Instance {
    Graph g;
    Ordering order;
    Coloring target;
};

Instance draw(std::mt19937_64& rng, int max_n)
{
    const int n = 1 + static_cast<int>(rng() % max_n);
    const double density = 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    Graph g = random_graph(n, density, rng);
    Ordering o = random_ordering(n, rng);
    Coloring c = random_proper_coloring(g, rng);
    return {std::move(g), std::move(o), std::move(c)};
}

std::vector<int> random_subset(int n, std::mt19937_64& rng)
{
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (rng() % 2)
            out.push_back(v);
    return out;
}

} // namespace

TEST_CASE("chi <= FF <= Grundy <= max degree + 1")
{
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 150; ++trial) {
        const Instance in = draw(rng, 7);
        const int chi = chromatic_number(in.g);
        const int ff = first_fit(in.g, in.order).num_colors();
        const int gamma = grundy_number(in.g);
        CHECK(chi == oracle::chromatic(in.g));
        CHECK(chi <= ff);
        CHECK(ff <= gamma);
        CHECK(gamma <= in.g.max_degree() + 1);
        CHECK(independence_number(in.g) == oracle::independence(in.g));
    }
}

TEST_CASE("first-fit output is descent-free and reproduced by the empty precoloring")
{
    std::mt19937_64 rng(102);
    for (int trial = 0; trial < 200; ++trial) {
        const Instance in = draw(rng, 12);
        const Coloring ff = first_fit(in.g, in.order);
        CHECK(is_descent_free(in.g, in.order, ff));
        CHECK(is_gds(in.g, in.order, ff, std::vector<int>{}));
    }
}

TEST_CASE("pinning every vertex returns the target")
{
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 200; ++trial) {
        const Instance in = draw(rng, 12);
        std::vector<int> all(in.g.size());
        std::iota(all.begin(), all.end(), 0);
        CHECK(first_fit_with_precoloring(in.g, in.order, Precoloring::restrict(in.target, all)) == in.target);
        CHECK(is_gds(in.g, in.order, in.target, all));
    }
}

TEST_CASE("a set is a GDS exactly when it hits every descent set")
{
    std::mt19937_64 rng(104);
    for (int trial = 0; trial < 300; ++trial) {
        const Instance in = draw(rng, 10);
        const auto family = descent_family(find_descents(in.g, in.order, in.target));
        const std::vector<int> s = random_subset(in.g.size(), rng);
        std::vector<bool> member(in.g.size());
        for (int v : s)
            member[v] = true;
        const bool hits = std::all_of(family.begin(), family.end(), [&](const auto& set) {
            return std::any_of(set.begin(), set.end(), [&](int v) { return member[v]; });
        });
        CHECK(is_gds(in.g, in.order, in.target, s) == hits);
    }
}

TEST_CASE("supersets of a GDS are GDS")
{
    std::mt19937_64 rng(105);
    for (int trial = 0; trial < 150; ++trial) {
        const Instance in = draw(rng, 10);
        const auto base = hitting_set_gds(in.g, in.order, in.target, HittingMode::greedy);
        REQUIRE(base.verified);
        std::vector<int> bigger = base.domain;
        for (int v : random_subset(in.g.size(), rng))
            if (std::find(bigger.begin(), bigger.end(), v) == bigger.end())
                bigger.push_back(v);
        CHECK(is_gds(in.g, in.order, in.target, bigger));
    }
}

TEST_CASE("minimum GDS is no larger than any hitting set")
{
    std::mt19937_64 rng(106);
    for (int trial = 0; trial < 120; ++trial) {
        const Instance in = draw(rng, 10);
        const auto greedy = hitting_set_gds(in.g, in.order, in.target, HittingMode::greedy);
        const auto exact = hitting_set_gds(in.g, in.order, in.target, HittingMode::exact);
        const auto minimum = minimum_gds(in.g, in.order, in.target);
        CHECK(minimum.verified);
        CHECK(exact.domain.size() <= greedy.domain.size());
        CHECK(minimum.domain.size() == exact.domain.size());
        CHECK(static_cast<int>(exact.stats.lower_bound) <= static_cast<int>(exact.domain.size()));
    }
}

TEST_CASE("quasi-lex orderings of random products give the lex colouring")
{
    std::mt19937_64 rng(107);
    std::map<std::pair<int, int>, std::uint64_t> expected_counts;
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 3);
        const int n = 1 + static_cast<int>(rng() % 3);
        const OrderedGraph g(random_graph(m, 0.6, rng), random_ordering(m, rng));
        const OrderedGraph h(random_graph(n, 0.6, rng), random_ordering(n, rng));
        const Graph prod = cartesian_product(g.graph(), h.graph()).graph();
        const Coloring lex = first_fit(prod, lex_ordering(g, h).order);
        const std::uint64_t count = for_each_quasi_lex(g, h, UINT64_MAX, [&](const ProductOrdering& o) {
            REQUIRE(is_quasi_lex(o.order, g, h));
            CHECK(first_fit(prod, o.order) == lex);
        });
        auto [it, fresh] = expected_counts.try_emplace({m, n}, 0);
        if (fresh)
            it->second = oracle::quasi_lex_count(m, n);
        CHECK(count == it->second);
    }
}
