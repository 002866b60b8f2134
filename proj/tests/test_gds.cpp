#include "oracles.hpp"

#include "ffgrid/error.hpp"
#include "ffgrid/gds.hpp"
#include "ffgrid/generators.hpp"
#include "ffgrid/latin.hpp"
#include "ffgrid/ordering.hpp"

#include <doctest.h>

#include <random>

using namespace ffgrid;

namespace {

Graph rook(int m, int n)
{
    return cartesian_product(complete_graph(m), complete_graph(n)).graph();
}

std::vector<int> colors_of(const Coloring& c)
{
    return {c.colors().begin(), c.colors().end()};
}

} // namespace

TEST_CASE("descent-free target needs no pins")
{
    const Graph g = rook(3, 3);
    const Ordering lex = Ordering::identity(9);
    const Coloring c = first_fit(g, lex);
    CHECK(hitting_set_gds(g, lex, c, HittingMode::exact).domain.empty());
    CHECK(hitting_set_gds(g, lex, c, HittingMode::greedy).verified);
    CHECK(minimum_gds(g, lex, c).domain.empty());
}

TEST_CASE("one pin fixes [[2,1],[1,2]]")
{
    const Graph g = rook(2, 2);
    const Ordering lex = Ordering::identity(4);
    const Coloring c({2, 1, 1, 2});
    const GdsCertificate cert = hitting_set_gds(g, lex, c, HittingMode::exact);
    CHECK(cert.verified);
    REQUIRE(cert.domain.size() == 1);
    CHECK(cert.domain[0] <= 2);
    CHECK(cert.k == 2);
    CHECK(minimum_gds(g, lex, c).domain.size() == 1);
    CHECK_FALSE(is_gds(g, lex, c, std::vector<int>{}));
    CHECK_FALSE(is_gds(g, lex, c, std::vector<int>{3}));
}

TEST_CASE("L_2 needs six pins")
{
    const LatinRectangle l2 = tensor_square(2);
    const LatinInstance inst = latin_instance(l2);
    const auto exact = hitting_set_gds(inst.product.graph(), inst.lex, l2.as_coloring(), HittingMode::exact);
    CHECK(exact.verified);
    CHECK(exact.domain.size() == 6);
    const auto minimum = minimum_gds(inst.product.graph(), inst.lex, l2.as_coloring());
    CHECK(minimum.verified);
    CHECK(minimum.domain.size() == 6);
    CHECK(minimum.method == "exhaustive");
    MinimumGdsOptions from_zero;
    from_zero.descent_floor = false;
    CHECK(minimum_gds(inst.product.graph(), inst.lex, l2.as_coloring(), {}, from_zero).domain.size() == 6);
    CHECK(oracle::minimum_gds_size(inst.product.graph(), oracle::identity(16), colors_of(l2.as_coloring())) == 6);
}

TEST_CASE("hitting set solver")
{
    SearchStats stats;
    const std::vector<std::vector<int>> family{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    CHECK(minimum_hitting_set(family, 4, stats).size() == 2);
    CHECK(disjoint_packing_bound(family, 4) == 2);
    const auto greedy = greedy_hitting_set(family, 4);
    for (const auto& set : family)
        CHECK(std::any_of(set.begin(), set.end(),
                          [&](int v) { return std::find(greedy.begin(), greedy.end(), v) != greedy.end(); }));
    CHECK(minimum_hitting_set({}, 3, stats).empty());
    CHECK(minimum_hitting_set({{2}, {2, 1}, {0}}, 3, stats) == std::vector<int>{0, 2});
}

TEST_CASE("minimum hitting set matches brute force")
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 80; ++trial) {
        const int universe = 3 + trial % 10;
        std::vector<std::vector<int>> family(1 + trial % 9);
        for (auto& set : family) {
            for (int v = 0; v < universe; ++v)
                if (rng() % 4 == 0)
                    set.push_back(v);
            if (set.empty())
                set.push_back(static_cast<int>(rng() % universe));
        }
        int best = universe;
        for (std::uint32_t mask = 0; mask < (1u << universe); ++mask) {
            bool hits = std::all_of(family.begin(), family.end(), [&](const auto& set) {
                return std::any_of(set.begin(), set.end(), [&](int v) { return mask >> v & 1; });
            });
            if (hits)
                best = std::min(best, __builtin_popcount(mask));
        }
        SearchStats stats;
        CHECK(static_cast<int>(minimum_hitting_set(family, universe, stats).size()) == best);
        CHECK(disjoint_packing_bound(family, universe) <= best);
    }
}

TEST_CASE("minimum GDS matches the subset oracle")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_graph(2 + trial % 9, 0.5, rng);
        const Coloring c = random_proper_coloring(g, rng);
        const Ordering o = random_ordering(g.size(), rng);
        const std::vector<int> scan(o.scan().begin(), o.scan().end());
        const int expected = oracle::minimum_gds_size(g, scan, colors_of(c));
        CHECK(static_cast<int>(minimum_gds(g, o, c).domain.size()) == expected);
        CHECK(static_cast<int>(hitting_set_gds(g, o, c, HittingMode::exact).domain.size()) == expected);
    }
}

TEST_CASE("is_gds agrees with the oracle")
{
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(2 + trial % 10, 0.5, rng);
        const Coloring c = random_proper_coloring(g, rng);
        const Ordering o = random_ordering(g.size(), rng);
        std::vector<int> domain;
        for (int v = 0; v < g.size(); ++v)
            if (rng() % 2)
                domain.push_back(v);
        const std::vector<int> scan(o.scan().begin(), o.scan().end());
        CHECK(is_gds(g, o, c, domain) == oracle::is_gds(g, scan, colors_of(c), domain));
    }
}

TEST_CASE("caps are enforced")
{
    const LatinRectangle l3 = tensor_square(3);
    const LatinInstance inst = latin_instance(l3);
    CHECK_THROWS_AS(minimum_gds(inst.product.graph(), inst.lex, l3.as_coloring()), CapExceeded);
    Caps tight;
    tight.hitting_family = 3;
    CHECK_THROWS_WITH_AS(hitting_set_gds(inst.product.graph(), inst.lex, l3.as_coloring(), HittingMode::exact, tight),
                         doctest::Contains("hitting_family"), CapExceeded);
}

TEST_CASE("quasi-lex GDS equivalence")
{
    const OrderedGraph k2(complete_graph(2));
    const OrderedGraph k3(complete_graph(3));
    const Coloring target({2, 1, 1, 2});
    const auto check = check_quasi_lex_gds_equivalence(k2, k2, target, std::vector<int>{0});
    CHECK(check.orderings == 2);
    CHECK(check.colorings_identical);
    CHECK(check.gds_under_lex);
    CHECK(check.holds());

    const Graph g = rook(3, 3);
    const Coloring ff = first_fit(g, Ordering::identity(9));
    const Ordering column_first = Ordering::from_scan({0, 3, 6, 1, 2, 4, 7, 5, 8});
    CHECK(first_fit(g, column_first) == ff);

    // a non-greedy target on K3 box K3 and its minimum GDS
    const Coloring square({1, 2, 3, 3, 1, 2, 2, 3, 1});
    const auto minimum = minimum_gds(g, Ordering::identity(9), square);
    const auto all = check_quasi_lex_gds_equivalence(k3, k3, square, minimum.domain);
    CHECK(all.orderings == 42);
    CHECK(all.gds_under_lex);
    CHECK(all.holds());
    const auto none = check_quasi_lex_gds_equivalence(k3, k3, square, std::vector<int>{});
    CHECK_FALSE(none.gds_under_lex);
    CHECK(none.holds());
}
