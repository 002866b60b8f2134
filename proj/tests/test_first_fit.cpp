#include "oracles.hpp"

#include "ffgrid/error.hpp"
#include "ffgrid/first_fit.hpp"
#include "ffgrid/generators.hpp"
#include "ffgrid/latin.hpp"

#include <doctest.h>

#include <random>

using namespace ffgrid;

namespace {

std::vector<int> colors_of(const Coloring& c)
{
    return {c.colors().begin(), c.colors().end()};
}

Graph rook(int m, int n)
{
    return cartesian_product(complete_graph(m), complete_graph(n)).graph();
}

} // namespace

TEST_CASE("first-fit on K3 box K3 under lex")
{
    const Coloring c = first_fit(rook(3, 3), Ordering::identity(9));
    CHECK(c.num_colors() == 4);
    CHECK(colors_of(c) == std::vector<int>{1, 2, 3, 2, 1, 4, 3, 4, 1});
}

TEST_CASE("first-fit on a path and on K2 box K5")
{
    const Coloring p = first_fit(path_graph(3), Ordering::identity(3));
    CHECK(colors_of(p) == std::vector<int>{1, 2, 1});
    const Coloring c = first_fit(rook(2, 5), Ordering::identity(10));
    CHECK(c.num_colors() == 6);
    CHECK(colors_of(c) == std::vector<int>{1, 2, 3, 4, 5, 2, 1, 4, 3, 6});
}

TEST_CASE("first-fit matches the oracle")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(1 + trial % 12, 0.4, rng);
        const Ordering o = random_ordering(g.size(), rng);
        const std::vector<int> scan(o.scan().begin(), o.scan().end());
        CHECK(colors_of(first_fit(g, o)) == oracle::first_fit(g, scan));
    }
}

TEST_CASE("colouring classes and validation")
{
    const Coloring c({2, 1, 2, 3});
    CHECK(c.num_colors() == 3);
    CHECK(c.classes() == std::vector<std::vector<int>>{{1}, {0, 2}, {3}});
    CHECK(c.uses_every_color());
    CHECK_FALSE(Coloring({1, 3}).uses_every_color());
    CHECK_THROWS_AS(Coloring({1, 0}), Error);
    CHECK(is_proper(path_graph(3), Coloring({1, 2, 1})));
    CHECK_FALSE(is_proper(path_graph(3), Coloring({1, 1, 2})));
}

TEST_CASE("precoloring: empty, full, and the K2 box K2 example")
{
    const Graph g = rook(2, 2);
    const Ordering lex = Ordering::identity(4);
    CHECK(first_fit_with_precoloring(g, lex, Precoloring(4)) == first_fit(g, lex));

    Precoloring pre(4);
    pre.pin(0, 2);
    CHECK(colors_of(first_fit_with_precoloring(g, lex, pre)) == std::vector<int>{2, 1, 1, 2});

    const Coloring target({2, 1, 1, 2});
    const std::vector<int> all{0, 1, 2, 3};
    CHECK(first_fit_with_precoloring(g, lex, Precoloring::restrict(target, all)) == target);
}

TEST_CASE("pinned D_2 reproduces L_2")
{
    const LatinRectangle l2 = tensor_square(2);
    const LatinInstance inst = latin_instance(l2);
    std::vector<int> domain;
    for (auto [i, j] : dk_construct(2))
        domain.push_back(l2.index(i, j));
    const Coloring out = first_fit_with_precoloring(inst.product.graph(), inst.lex,
                                                    Precoloring::restrict(l2.as_coloring(), domain));
    CHECK(out == l2.as_coloring());
}

TEST_CASE("precoloring conflict")
{
    Precoloring pre(3);
    pre.pin(0, 1);
    pre.pin(1, 1);
    CHECK_THROWS_WITH_AS(first_fit_with_precoloring(path_graph(3), Ordering::identity(3), pre),
                         doctest::Contains("precoloring conflict"), Error);
}

TEST_CASE("precoloring agrees with the oracle")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(2 + trial % 10, 0.5, rng);
        const Coloring target = random_proper_coloring(g, rng);
        const Ordering o = random_ordering(g.size(), rng);
        std::vector<int> domain;
        for (int v = 0; v < g.size(); ++v)
            if (rng() % 3 == 0)
                domain.push_back(v);
        const std::vector<int> scan(o.scan().begin(), o.scan().end());
        const std::vector<int> expect =
            oracle::first_fit_pinned(g, scan, colors_of(target), domain);
        CHECK(colors_of(first_fit_with_precoloring(g, o, Precoloring::restrict(target, domain))) == expect);
    }
}

TEST_CASE("grundy number examples")
{
    CHECK(grundy_number(rook(3, 3)) == 4);
    CHECK(grundy_number(rook(2, 3)) == 4);
    CHECK(grundy_number(complete_graph(1)) == 1);
    CHECK(grundy_number(path_graph(4)) == 3);
    CHECK(grundy_number_by_partitions(rook(3, 4)) == 6);
    Caps small;
    small.grundy = 8;
    CHECK_THROWS_AS(grundy_number(rook(3, 3), small), CapExceeded);
}

TEST_CASE("the two grundy routes agree with the oracle")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(1 + trial % 7, 0.5, rng);
        const int expected = oracle::grundy(g);
        CHECK(grundy_number_by_orderings(g) == expected);
        CHECK(grundy_number_by_partitions(g) == expected);
    }
}

TEST_CASE("grundy witness for K_m box K_n")
{
    CHECK(grundy_witness_km_kn(2, 3).coloring.num_colors() == 4);
    CHECK(grundy_witness_km_kn(1, 2).coloring.num_colors() == 2);
    const GrundyWitness w = grundy_witness_km_kn(3, 5);
    CHECK(w.coloring.num_colors() == 7);
    CHECK(first_fit(rook(3, 5), w.order) == w.coloring);
    CHECK_THROWS_AS(grundy_witness_km_kn(3, 3), Error);
    CHECK_THROWS_AS(grundy_witness_km_kn(0, 3), Error);
}

TEST_CASE("formatting")
{
    const Coloring c({1, 2, 2, 1});
    CHECK(format_colors(c) == "colors: 1 2 2 1");
    CHECK(format_grid(c, 2, 2) == "1,2\n2,1\n");
    CHECK_THROWS_AS(format_grid(c, 3, 2), Error);
}
