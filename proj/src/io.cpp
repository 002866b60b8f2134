#include "ffgrid/io.hpp"

#include "ffgrid/error.hpp"
#include "ffgrid/ordering.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace ffgrid {

namespace {

std::vector<int> parse_ints(const std::string& line, int line_number, char sep = ' ')
{
    std::vector<int> out;
    std::string norm = line;
    if (sep != ' ')
        for (char& c : norm)
            if (c == sep)
                c = ' ';
    std::istringstream in(norm);
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(token, &used));
            if (used != token.size())
                throw std::invalid_argument(token);
        } catch (const std::logic_error&) {
            throw ParseError("bad integer '" + token + "'", line_number);
        }
    }
    return out;
}

bool skippable(const std::string& line)
{
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

} // namespace

ParsedGraph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int line_number = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    std::optional<Ordering> order;
    while (std::getline(in, line)) {
        ++line_number;
        if (skippable(line))
            continue;
        if (line.find("order:") != std::string::npos) {
            if (n < 0)
                throw ParseError("ordering before header", line_number);
            order = parse_ordering_line(line, line_number);
            if (order->size() != n)
                throw ParseError("ordering lists " + std::to_string(order->size()) + " vertices, expected "
                                     + std::to_string(n),
                                 line_number);
            continue;
        }
        if (order)
            throw ParseError("content after ordering line", line_number);
        const auto ints = parse_ints(line, line_number);
        if (ints.size() != 2)
            throw ParseError("expected two integers", line_number);
        if (n < 0) {
            n = ints[0];
            m = ints[1];
            if (n < 1 || m < 0)
                throw ParseError("header needs n >= 1 and m >= 0", line_number);
            continue;
        }
        if (static_cast<int>(edges.size()) == m)
            throw ParseError("more than " + std::to_string(m) + " edges", line_number);
        const auto [u, v] = std::pair{ints[0], ints[1]};
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("vertex out of range", line_number);
        if (u == v)
            throw ParseError("loop at vertex " + std::to_string(u), line_number);
        edges.emplace_back(u, v);
    }
    if (n < 0)
        throw ParseError("missing 'n m' header", 0);
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()),
                         line_number);
    return {Graph(n, edges), order};
}

std::string format_edge_list(const Graph& g, const Ordering* order)
{
    std::ostringstream out;
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    if (order)
        out << format_ordering(*order) << '\n';
    return out.str();
}

Coloring parse_coloring(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int line_number = 0;
    std::vector<int> colors;
    while (std::getline(in, line)) {
        ++line_number;
        if (skippable(line))
            continue;
        const auto colon = line.find("colors:");
        const auto values = colon != std::string::npos ? parse_ints(line.substr(colon + 7), line_number)
                                                       : parse_ints(line, line_number, ',');
        for (int c : values)
            if (c < 1)
                throw ParseError("colours must be positive", line_number);
        colors.insert(colors.end(), values.begin(), values.end());
    }
    return Coloring(std::move(colors));
}

nlohmann::json certificate_json(const GdsCertificate& cert, int cols)
{
    using nlohmann::json;
    json vertices = json::array();
    json colors = json::array();
    for (int v : cert.domain) {
        if (cols > 0)
            vertices.push_back({v / cols, v % cols});
        else
            vertices.push_back(v);
        colors.push_back(cert.target.color(v));
    }
    return {
        {"vertices", vertices},
        {"colors", colors},
        {"size", cert.domain.size()},
        {"k", cert.k},
        {"verified", cert.verified},
        {"method", cert.method},
        {"search_stats",
         {{"nodes", cert.stats.nodes},
          {"replays", cert.stats.replays},
          {"family_size", cert.stats.family_size},
          {"lower_bound", cert.stats.lower_bound}}},
    };
}

nlohmann::json reduction_json(const ReductionReport& r, const std::string& g_name, const std::string& h_name)
{
    using nlohmann::json;
    auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
    return {
        {"g", g_name},
        {"h", h_name},
        {"p", r.p},
        {"q", r.q},
        {"ff_product", r.ff_product},
        {"ff_complete", r.ff_complete},
        {"grundy_g", opt(r.grundy_g)},
        {"grundy_h", opt(r.grundy_h)},
        {"bounds", {{"sum", opt(r.sum_bound)}, {"square", opt(r.square_bound)}, {"power", opt(r.power_formula)}}},
        {"verdicts",
         {{"reduction", r.ff_product == r.ff_complete},
          {"sum_bound", r.sum_bound_holds},
          {"square_bound", r.square_bound_holds},
          {"power", !r.power_formula || *r.power_formula == r.ff_product}}},
    };
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

OrderedGraph graph_from_spec(std::string_view spec)
{
    if (spec.size() >= 2 && (spec[0] == 'K' || spec[0] == 'P' || spec[0] == 'C')
        && spec.find_first_not_of("0123456789", 1) == std::string_view::npos) {
        const int n = std::stoi(std::string(spec.substr(1)));
        if (n < 1)
            throw Error("graph '" + std::string(spec) + "' needs at least one vertex");
        switch (spec[0]) {
        case 'K':
            return OrderedGraph(complete_graph(n));
        case 'P':
            return OrderedGraph(path_graph(n));
        default:
            return OrderedGraph(cycle_graph(n));
        }
    }
    return parse_edge_list(read_file(std::string(spec))).ordered();
}

NamedProduct product_from_spec(std::string_view spec)
{
    const auto comma = spec.find(',');
    if (comma == std::string_view::npos || spec.find(',', comma + 1) != std::string_view::npos)
        throw Error("product spec '" + std::string(spec) + "' should be G,H");
    const std::string g(spec.substr(0, comma));
    const std::string h(spec.substr(comma + 1));
    return {g, h, graph_from_spec(g), graph_from_spec(h)};
}

} // namespace ffgrid
