#include "ffgrid/bridge.hpp"

#include "ffgrid/descent.hpp"
#include "ffgrid/error.hpp"
#include "ffgrid/first_fit.hpp"
#include "ffgrid/ordering.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

namespace ffgrid {

int ff_complete_product(int p, int q)
{
    static std::mutex lock;
    static std::map<std::pair<int, int>, int> memo;
    {
        std::scoped_lock guard(lock);
        if (auto it = memo.find({p, q}); it != memo.end())
            return it->second;
    }
    const ProductGraph kk = cartesian_product(complete_graph(p), complete_graph(q));
    const int value = first_fit(kk.graph(), Ordering::identity(kk.size())).num_colors();
    std::scoped_lock guard(lock);
    memo.emplace(std::pair{p, q}, value);
    return value;
}

int power_of_two_ceiling(int n)
{
    if (n < 1)
        throw Error("power_of_two_ceiling needs n >= 1");
    int power = 1;
    while (power < n)
        power <<= 1;
    return power;
}

ReductionReport reduction_report(const OrderedGraph& g, const OrderedGraph& h, const Caps& caps)
{
    ReductionReport out;
    out.p = first_fit(g.graph(), g.order()).num_colors();
    out.q = first_fit(h.graph(), h.order()).num_colors();
    const ProductGraph product = cartesian_product(g.graph(), h.graph(), caps);
    out.ff_product = first_fit(product.graph(), lex_ordering(g, h).order).num_colors();
    out.ff_complete = ff_complete_product(out.p, out.q);
    if (out.ff_product != out.ff_complete)
        throw TheoremViolation("FF(G box H, lex) = " + std::to_string(out.ff_product) + " but FF(K_p box K_q, lex) = "
                               + std::to_string(out.ff_complete));
    if (g == h) {
        out.power_formula = power_of_two_ceiling(out.p);
        if (*out.power_formula != out.ff_product)
            throw TheoremViolation("FF(G box G, lex) = " + std::to_string(out.ff_product) + " but 2^ceil(log2 "
                                   + std::to_string(out.p) + ") = " + std::to_string(*out.power_formula));
    }
    if (g.size() <= caps.grundy && h.size() <= caps.grundy) {
        out.grundy_g = grundy_number(g.graph(), caps);
        out.grundy_h = g.graph() == h.graph() ? *out.grundy_g : grundy_number(h.graph(), caps);
        out.sum_bound = *out.grundy_g + *out.grundy_h - 1;
        out.sum_bound_holds = out.ff_product <= *out.sum_bound;
        if (g.graph() == h.graph()) {
            out.square_bound = 2 * *out.grundy_g - 2;
            out.square_bound_holds = out.ff_product <= *out.square_bound;
        }
    }
    return out;
}

Coloring lifted_coloring(const OrderedGraph& g, const OrderedGraph& h, const LatinRectangle& r)
{
    const Coloring cg = first_fit(g.graph(), g.order());
    const Coloring ch = first_fit(h.graph(), h.order());
    if (r.rows() != cg.num_colors() || r.cols() != ch.num_colors())
        throw Error("rectangle is " + std::to_string(r.rows()) + "x" + std::to_string(r.cols())
                    + " but the factors use " + std::to_string(cg.num_colors()) + " and "
                    + std::to_string(ch.num_colors()) + " colours");
    const int cols = h.size();
    std::vector<int> colors(g.size() * cols);
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < cols; ++b)
            colors[a * cols + b] = r.at(cg.color(a) - 1, ch.color(b) - 1);
    return Coloring(std::move(colors));
}

GdsCertificate lift_latin_gds(const OrderedGraph& g, const OrderedGraph& h, const LatinRectangle& r,
                              std::span<const Cell> cells)
{
    const Coloring target = lifted_coloring(g, h, r);
    const int q = r.cols();
    std::vector<int> rect_cells;
    for (auto [i, j] : cells) {
        if (i < 0 || j < 0 || i >= r.rows() || j >= q)
            throw Error("cell outside the rectangle");
        rect_cells.push_back(r.index(i, j));
    }
    const LatinInstance inst = latin_instance(r);
    if (!is_gds(inst.product.graph(), inst.lex, r.as_coloring(), rect_cells))
        throw Error("cells are not a GDS of the rectangle");

    const auto cg = first_fit(g.graph(), g.order()).classes();
    const auto ch = first_fit(h.graph(), h.order()).classes();
    std::vector<int> domain;
    for (auto [i, j] : cells)
        for (int a : cg[i])
            for (int b : ch[j])
                domain.push_back(a * h.size() + b);

    const ProductGraph product = cartesian_product(g.graph(), h.graph());
    auto cert = certify_gds(product.graph(), lex_ordering(g, h).order, target, std::move(domain), "lift");
    if (!cert.verified)
        throw TheoremViolation("lifted set failed to reproduce the product colouring");
    if (cert.k != q)
        throw TheoremViolation("lifted colouring uses " + std::to_string(cert.k) + " colours, expected "
                               + std::to_string(q));
    return cert;
}

ProductGdsBound product_gds_bound(const OrderedGraph& g, const OrderedGraph& h, const Caps& caps)
{
    ProductGdsBound out;
    out.p = first_fit(g.graph(), g.order()).num_colors();
    out.q = first_fit(h.graph(), h.order()).num_colors();
    if (out.p < 2)
        throw Error("product GDS bound needs FF(G) >= 2");
    if (out.p > out.q)
        throw Error("product GDS bound needs FF(G) <= FF(H)");
    out.alpha_g = independence_number(g.graph(), caps);
    out.alpha_h = independence_number(h.graph(), caps);
    out.bound = out.alpha_g * out.alpha_h * rectangle_gds_bound(out.p, out.q);
    return out;
}

ProductGdsWitness product_gds_witness(const OrderedGraph& g, const OrderedGraph& h, const LatinRectangle& r,
                                      const Caps& caps)
{
    ProductGdsWitness out;
    out.bound = product_gds_bound(g, h, caps);
    out.rectangle = rectangle_gds_via_cover(r, caps);
    std::vector<Cell> cells;
    for (int v : out.rectangle.certificate.domain)
        cells.emplace_back(v / r.cols(), v % r.cols());
    out.lifted = lift_latin_gds(g, h, r, cells);
    out.within_bound = static_cast<double>(out.lifted.domain.size()) <= out.bound.bound;
    return out;
}

namespace {

class ColoringScan {
public:
    ColoringScan(const Graph& g, const Ordering& lex, int colors, std::uint64_t limit)
        : g_(g), lex_(lex), k_(colors), limit_(limit), color_(g.size(), 0)
    {
    }

    // Exhaustive pass. Returns false if more than `limit` colourings exist.
    bool all(CorollaryVerdict& verdict)
    {
        verdict_ = &verdict;
        rng_ = nullptr;
        return !extend(0);
    }

    // One random backtracking draw down to a complete colouring.
    void sample(CorollaryVerdict& verdict, std::mt19937_64& rng)
    {
        verdict_ = &verdict;
        rng_ = &rng;
        std::fill(color_.begin(), color_.end(), 0);
        extend(0);
    }

private:
    // Returns true to stop the whole walk.
    bool extend(int v)
    {
        if (v == g_.size()) {
            ++verdict_->colorings_scanned;
            const Coloring c(color_);
            if (c.num_colors() == k_ && is_descent_free(g_, lex_, c))
                verdict_->found_descent_free = true;
            return rng_ != nullptr || verdict_->colorings_scanned > limit_;
        }
        std::vector<int> palette(k_);
        std::iota(palette.begin(), palette.end(), 1);
        if (rng_)
            std::shuffle(palette.begin(), palette.end(), *rng_);
        for (int c : palette) {
            if (std::any_of(g_.neighbors(v).begin(), g_.neighbors(v).end(), [&](int u) { return color_[u] == c; }))
                continue;
            color_[v] = c;
            const bool stop = extend(v + 1);
            color_[v] = 0;
            if (stop)
                return true;
        }
        return false;
    }

    const Graph& g_;
    const Ordering& lex_;
    int k_;
    std::uint64_t limit_;
    std::vector<int> color_;
    CorollaryVerdict* verdict_ = nullptr;
    std::mt19937_64* rng_ = nullptr;
};

} // namespace

CorollaryVerdict corollary_check(const OrderedGraph& g, const Caps& caps, std::uint64_t seed,
                                 std::uint64_t exhaustive_limit, std::uint64_t samples)
{
    const ProductGraph product = cartesian_product(g.graph(), g.graph(), caps);
    if (product.size() > caps.corollary)
        throw CapExceeded("corollary check on a product with " + std::to_string(product.size()) + " vertices",
                          "corollary");
    const Ordering lex = lex_ordering(g, g).order;
    CorollaryVerdict out;
    out.chi = chromatic_number(product.graph(), caps);
    out.ff_product = first_fit(product.graph(), lex).num_colors();

    ColoringScan scan(product.graph(), lex, out.chi, exhaustive_limit);
    out.exhaustive = scan.all(out);
    if (!out.exhaustive) {
        std::mt19937_64 rng(seed);
        for (std::uint64_t i = 0; i < samples && !out.found_descent_free; ++i)
            scan.sample(out, rng);
    }
    if (out.found_descent_free) {
        const bool power = out.chi > 0 && (out.chi & (out.chi - 1)) == 0;
        out.holds = out.ff_product == out.chi && power;
    }
    return out;
}

} // namespace ffgrid
