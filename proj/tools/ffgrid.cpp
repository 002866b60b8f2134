#include "ffgrid/bridge.hpp"
#include "ffgrid/campaign.hpp"
#include "ffgrid/caps.hpp"
#include "ffgrid/descent.hpp"
#include "ffgrid/error.hpp"
#include "ffgrid/first_fit.hpp"
#include "ffgrid/gds.hpp"
#include "ffgrid/io.hpp"
#include "ffgrid/latin.hpp"
#include "ffgrid/ordering.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace ffgrid;
using nlohmann::json;

namespace {

struct Common {
    std::string caps;
    std::string format = "text";
    std::string out;
};

Caps resolve_caps(const Common& common)
{
    Caps caps = caps_from_environment();
    if (!common.caps.empty())
        caps = parse_caps(common.caps, caps);
    return caps;
}

void emit(const Common& common, const std::string& text)
{
    if (common.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(common.out);
    if (!file)
        throw Error("cannot write '" + common.out + "'");
    file << text;
}

// "lex", "file:<path>" (an "order:" line) or "perm:<v0>,<v1>,...".
std::optional<Ordering> parse_order_spec(const std::string& spec)
{
    if (spec.empty() || spec == "lex")
        return std::nullopt;
    if (spec.rfind("perm:", 0) == 0) {
        std::string list = spec.substr(5);
        for (char& c : list)
            if (c == ',')
                c = ' ';
        return parse_ordering_line("order: " + list);
    }
    if (spec.rfind("file:", 0) == 0) {
        std::istringstream in(read_file(spec.substr(5)));
        std::string line;
        int line_number = 0;
        while (std::getline(in, line)) {
            ++line_number;
            const auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#')
                continue;
            return parse_ordering_line(line, line_number);
        }
        throw ParseError("no 'order:' line in " + spec.substr(5), 0);
    }
    throw Error("ordering spec '" + spec + "' should be lex, file:<path> or perm:<list>");
}

LatinRectangle latin_from_spec(const std::string& spec, const Caps& caps)
{
    if (spec.rfind("Lk:", 0) == 0)
        return tensor_square(std::stoi(spec.substr(3)), caps);
    if (spec.rfind("Ct:", 0) == 0)
        return cayley_table(std::stoi(spec.substr(3)), caps);
    return parse_latin_csv(read_file(spec));
}

// ---------------------------------------------------------------------------

struct ColorArgs {
    std::string product;
    std::string graph;
    std::string order = "lex";
};

int cmd_color(const ColorArgs& args, const Common& common)
{
    const Caps caps = resolve_caps(common);
    if (args.product.empty() == args.graph.empty())
        throw Error("give exactly one of --product and --graph");
    Graph g;
    Ordering order;
    int rows = 0, cols = 0;
    if (!args.product.empty()) {
        const NamedProduct np = product_from_spec(args.product);
        const ProductGraph product = cartesian_product(np.g.graph(), np.h.graph(), caps);
        g = product.graph();
        rows = product.rows();
        cols = product.cols();
        order = lex_ordering(np.g, np.h).order;
    } else {
        const OrderedGraph og = graph_from_spec(args.graph);
        g = og.graph();
        order = og.order();
    }
    if (auto custom = parse_order_spec(args.order)) {
        if (custom->size() != g.size())
            throw Error("ordering has " + std::to_string(custom->size()) + " vertices, graph has "
                        + std::to_string(g.size()));
        order = *custom;
    }
    const Coloring c = first_fit(g, order);
    const bool descent_free = is_descent_free(g, order, c);

    if (common.format == "json") {
        json out = {{"schema", 1},
                    {"k", c.num_colors()},
                    {"colors", c.colors()},
                    {"order", order.scan()},
                    {"descent_free", descent_free}};
        if (rows)
            out["grid"] = {{"rows", rows}, {"cols", cols}};
        emit(common, out.dump(2) + "\n");
    } else if (common.format == "csv") {
        emit(common, rows ? format_grid(c, rows, cols) : format_grid(c, 1, c.size()));
    } else {
        std::string text = "k=" + std::to_string(c.num_colors()) + "\n";
        text += rows ? format_grid(c, rows, cols) : format_colors(c) + "\n";
        text += std::string("descent-free: ") + (descent_free ? "yes" : "no") + "\n";
        emit(common, text);
    }
    return descent_free ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct GdsArgs {
    std::string latin;
    std::string product;
    std::string order = "lex";
    std::string method = "hitting-exact";
};

std::string certificate_text(const GdsCertificate& cert, int cols)
{
    std::ostringstream out;
    out << "method: " << cert.method << '\n'
        << "size: " << cert.domain.size() << '\n'
        << "k: " << cert.k << '\n'
        << "verified: " << (cert.verified ? "yes" : "no") << '\n'
        << "cells:";
    for (int v : cert.domain) {
        if (cols > 0)
            out << " (" << v / cols << ',' << v % cols << ")=" << cert.target.color(v);
        else
            out << ' ' << v << '=' << cert.target.color(v);
    }
    out << '\n';
    if (cert.stats.nodes || cert.stats.family_size)
        out << "search: " << cert.stats.nodes << " nodes, " << cert.stats.replays << " replays, "
            << cert.stats.family_size << " descent sets, lower bound " << cert.stats.lower_bound << '\n';
    return out.str();
}

GdsCertificate search(const Graph& g, const Ordering& order, const Coloring& c, const std::string& method,
                      const Caps& caps)
{
    if (method == "hitting-greedy")
        return hitting_set_gds(g, order, c, HittingMode::greedy, caps);
    if (method == "hitting-exact")
        return hitting_set_gds(g, order, c, HittingMode::exact, caps);
    if (method == "exhaustive")
        return minimum_gds(g, order, c, caps);
    throw Error("method '" + method + "' does not apply here");
}

int cmd_gds(const GdsArgs& args, const Common& common)
{
    const Caps caps = resolve_caps(common);
    GdsCertificate cert;
    int cols = 0;
    std::optional<LatinRectangle> rect;

    if (args.method == "lift") {
        if (args.latin.empty() || args.product.empty())
            throw Error("--method lift needs both --latin and --product");
        const NamedProduct np = product_from_spec(args.product);
        rect = latin_from_spec(args.latin, caps);
        const CoverGdsResult cover = rectangle_gds_via_cover(*rect, caps);
        std::vector<Cell> cells;
        for (int v : cover.certificate.domain)
            cells.emplace_back(v / rect->cols(), v % rect->cols());
        cert = lift_latin_gds(np.g, np.h, *rect, cells);
        cols = np.h.size();
        rect.reset();
    } else if (!args.latin.empty()) {
        if (!args.product.empty())
            throw Error("give only one of --latin and --product");
        rect = latin_from_spec(args.latin, caps);
        const LatinInstance inst = latin_instance(*rect);
        cols = rect->cols();
        if (args.method == "dk") {
            if (args.latin.rfind("Lk:", 0) != 0)
                throw Error("--method dk needs --latin Lk:<k>");
            const auto cells = dk_construct(std::stoi(args.latin.substr(3)), caps);
            std::vector<int> domain;
            for (auto [i, j] : cells)
                domain.push_back(rect->index(i, j));
            cert = certify_gds(inst.product.graph(), inst.lex, rect->as_coloring(), std::move(domain), "dk");
        } else {
            cert = search(inst.product.graph(), inst.lex, rect->as_coloring(), args.method, caps);
        }
    } else if (!args.product.empty()) {
        const NamedProduct np = product_from_spec(args.product);
        const ProductGraph product = cartesian_product(np.g.graph(), np.h.graph(), caps);
        Ordering order = lex_ordering(np.g, np.h).order;
        if (auto custom = parse_order_spec(args.order))
            order = *custom;
        cols = product.cols();
        cert = search(product.graph(), order, first_fit(product.graph(), order), args.method, caps);
    } else {
        throw Error("give --latin or --product");
    }

    if (common.format == "json") {
        json out = certificate_json(cert, cols);
        out["schema"] = 1;
        emit(common, out.dump(2) + "\n");
    } else if (common.format == "csv") {
        if (!rect)
            throw Error("--format csv is only available for --latin targets");
        std::vector<Cell> cells;
        for (int v : cert.domain)
            cells.emplace_back(v / cols, v % cols);
        emit(common, format_dk_csv(cells, *rect));
    } else {
        emit(common, certificate_text(cert, cols));
    }
    return cert.verified ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string id;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::optional<int> nmax;
    std::optional<int> vmax;
    std::optional<std::uint64_t> samples;
    std::vector<std::string> products;
};

int cmd_verify(const VerifyArgs& args, const Common& common)
{
    CampaignConfig config;
    config.id = args.id;
    config.seed = args.seed;
    config.threads = args.threads;
    config.nmax = args.nmax;
    config.vmax = args.vmax;
    config.samples = args.samples;
    config.caps = resolve_caps(common);
    for (const auto& p : args.products)
        config.products.push_back(product_from_spec(p));
    const CampaignReport report = run_campaign(config);
    if (common.format == "json")
        emit(common, report_json(report, config).dump(2) + "\n");
    else if (common.format == "text")
        emit(common, format_report_text(report));
    else
        throw Error("verify reports are text or json");
    return report.passed() ? 0 : 1;
}

void add_common(CLI::App* cmd, Common& common)
{
    cmd->add_option("--caps", common.caps, "Cap overrides, key=value,...");
    cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", common.out, "Write the report to this file");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"First-Fit colourings of Cartesian products and greedy defining sets"};
    app.require_subcommand(1);
    Common common;

    ColorArgs color;
    auto* color_cmd = app.add_subcommand("color", "First-Fit colouring of a graph or product");
    color_cmd->add_option("--product", color.product, "G,H with G and H each Kn, Pn, Cn or an edge-list file");
    color_cmd->add_option("--graph", color.graph, "Kn, Pn, Cn or an edge-list file");
    color_cmd->add_option("--order", color.order, "lex, file:<path> or perm:<v0,v1,...>");
    add_common(color_cmd, common);

    GdsArgs gds;
    auto* gds_cmd = app.add_subcommand("gds", "Greedy defining set of a Latin rectangle or product colouring");
    gds_cmd->add_option("--latin", gds.latin, "Lk:<k>, Ct:<t> or a CSV file");
    gds_cmd->add_option("--product", gds.product, "G,H; the target is the lex First-Fit colouring");
    gds_cmd->add_option("--order", gds.order, "Product ordering: lex, file:<path> or perm:<list>");
    gds_cmd->add_option("--method", gds.method, "Search method")
        ->check(CLI::IsMember({"hitting-greedy", "hitting-exact", "exhaustive", "dk", "lift"}));
    add_common(gds_cmd, common);

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run a property campaign");
    verify_cmd->add_option("id", verify.id, "T1..T11, P1 or COR")->required();
    verify_cmd->add_option("--seed", verify.seed, "Seed for random instances");
    verify_cmd->add_option("--threads", verify.threads, "Worker threads (0: all cores)");
    verify_cmd->add_option("--nmax", verify.nmax, "Largest size parameter");
    verify_cmd->add_option("--vmax", verify.vmax, "Largest factor vertex count");
    verify_cmd->add_option("--samples", verify.samples, "Random instances");
    verify_cmd->add_option("--product", verify.products, "G,H products for T2 and T7 (repeatable)");
    add_common(verify_cmd, common);

    CLI11_PARSE(app, argc, argv);

    try {
        if (color_cmd->parsed())
            return cmd_color(color, common);
        if (gds_cmd->parsed())
            return cmd_gds(gds, common);
        return cmd_verify(verify, common);
    } catch (const Error& e) {
        std::cerr << "ffgrid: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ffgrid: " << e.what() << '\n';
        return 2;
    }
}
