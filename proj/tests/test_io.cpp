#include "ffgrid/error.hpp"
#include "ffgrid/io.hpp"
#include "ffgrid/latin.hpp"
#include "ffgrid/ordering.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace ffgrid;

TEST_CASE("edge list round trip")
{
    const ParsedGraph p = parse_edge_list("# a path\n3 2\n0 1\n\n1 2\norder: 2 0 1\n");
    CHECK(p.graph.size() == 3);
    CHECK(p.graph.edge_count() == 2);
    CHECK(p.graph.adjacent(0, 1));
    CHECK_FALSE(p.graph.adjacent(0, 2));
    REQUIRE(p.order.has_value());
    CHECK(p.order->scan()[0] == 2);
    CHECK(p.ordered().order().rank(2) == 0);

    const std::string text = format_edge_list(p.graph, &*p.order);
    const ParsedGraph again = parse_edge_list(text);
    CHECK(format_edge_list(again.graph, &*again.order) == text);
    CHECK(format_edge_list(complete_graph(3)) == "3 3\n0 1\n0 2\n1 2\n");

    const ParsedGraph bare = parse_edge_list("1 0\n");
    CHECK_FALSE(bare.order.has_value());
    CHECK(bare.ordered().order().size() == 1);
}

TEST_CASE("edge list errors carry line numbers")
{
    CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n0 x\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n0 2\n"), doctest::Contains("out of range"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n1 1\n"), doctest::Contains("loop"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n0 1\n1 0\n"), doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\n"), doctest::Contains("expected 2 edges"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("# nothing\n"), doctest::Contains("header"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("2 0\norder: 0\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 0\norder: 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1 7\n"), ParseError);
}

TEST_CASE("colouring text")
{
    CHECK(parse_coloring("colors: 1 2 1\n").colors().size() == 3);
    const Coloring grid = parse_coloring("1,2\n2,1\n");
    CHECK(grid == Coloring({1, 2, 2, 1}));
    CHECK_THROWS_WITH_AS(parse_coloring("1,2\n0,1\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(parse_coloring("1,a\n"), ParseError);
}

TEST_CASE("certificate JSON")
{
    const LatinRectangle l1 = tensor_square(1);
    const LatinInstance inst = latin_instance(l1);
    const GdsCertificate cert = certify_gds(inst.product.graph(), inst.lex, l1.as_coloring(), std::vector<int>{0},
                                            "hitting-exact");
    const auto flat = certificate_json(cert);
    CHECK(flat["vertices"] == nlohmann::json::array({0}));
    CHECK(flat["colors"] == nlohmann::json::array({2}));
    CHECK(flat["size"] == 1);
    CHECK(flat["k"] == 2);
    CHECK(flat["verified"] == true);
    CHECK(flat["method"] == "hitting-exact");
    CHECK(flat["search_stats"].contains("nodes"));
    const auto pairs = certificate_json(cert, 2);
    CHECK(pairs["vertices"][0] == nlohmann::json::array({0, 0}));
}

TEST_CASE("reduction JSON")
{
    const ReductionReport r = reduction_report(OrderedGraph(complete_graph(1)), OrderedGraph(complete_graph(1)));
    const auto j = reduction_json(r, "K1", "K1");
    CHECK(j["g"] == "K1");
    CHECK(j["ff_product"] == 1);
    CHECK(j["bounds"]["square"] == 0);
    CHECK(j["verdicts"]["reduction"] == true);
    CHECK(j["verdicts"]["square_bound"] == false);
    const ReductionReport ph = reduction_report(OrderedGraph(path_graph(3)), OrderedGraph(complete_graph(3)));
    CHECK(reduction_json(ph, "P3", "K3")["bounds"]["power"].is_null());
}

TEST_CASE("graph and product specs")
{
    CHECK(graph_from_spec("K4").graph().edge_count() == 6);
    CHECK(graph_from_spec("P4").graph().edge_count() == 3);
    CHECK(graph_from_spec("C5").graph().edge_count() == 5);
    CHECK_THROWS_AS(graph_from_spec("C2"), Error);
    CHECK_THROWS_AS(graph_from_spec("no-such-file.txt"), Error);

    const NamedProduct p = product_from_spec("K2,P3");
    CHECK(p.name() == "K2,P3");
    CHECK(p.g.graph().size() == 2);
    CHECK(p.h.graph().size() == 3);
    CHECK_THROWS_AS(product_from_spec("K2"), Error);
    CHECK_THROWS_AS(product_from_spec("K2,K3,K4"), Error);

    const std::string path = "ffgrid_io_test_graph.txt";
    {
        std::ofstream out(path);
        out << "3 2\n0 1\n1 2\norder: 1 0 2\n";
    }
    const OrderedGraph g = graph_from_spec(path);
    CHECK(g.order().scan()[0] == 1);
    CHECK(read_file(path).rfind("3 2", 0) == 0);
    std::remove(path.c_str());
}
