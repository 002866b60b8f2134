#pragma once

#include "ffgrid/bridge.hpp"
#include "ffgrid/first_fit.hpp"
#include "ffgrid/gds.hpp"
#include "ffgrid/graph.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace ffgrid {

// Edge-list text:
//   n m
//   u v        (m lines, 0-based)
//   order: p0 p1 ... p_(n-1)   (optional, scan order)
// Blank lines and lines starting with '#' are ignored.
struct ParsedGraph {
    Graph graph;
    std::optional<Ordering> order;

    OrderedGraph ordered() const { return order ? OrderedGraph(graph, *order) : OrderedGraph(graph); }
};

ParsedGraph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g, const Ordering* order = nullptr);

// Either a "colors: c0 c1 ..." line or a CSV grid read row-major.
Coloring parse_coloring(std::string_view text);

// { vertices, colors, k, verified, method, search_stats }. With cols > 0 the
// vertices are written as [g, h] pairs of a product with that many columns.
nlohmann::json certificate_json(const GdsCertificate& cert, int cols = 0);

// { g, h, p, q, ff_product, ff_complete, grundy_g, grundy_h, bounds, verdicts }
nlohmann::json reduction_json(const ReductionReport& report, const std::string& g_name, const std::string& h_name);

std::string read_file(const std::string& path);

// "K<n>", "P<n>", "C<n>" (identity ordering) or the path of an edge-list file.
OrderedGraph graph_from_spec(std::string_view spec);

struct NamedProduct {
    std::string g_name;
    std::string h_name;
    OrderedGraph g;
    OrderedGraph h;

    std::string name() const { return g_name + "," + h_name; }
};

// "<spec>,<spec>" as accepted by graph_from_spec.
NamedProduct product_from_spec(std::string_view spec);

} // namespace ffgrid
