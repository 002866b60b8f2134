#pragma once

#include "ffgrid/caps.hpp"
#include "ffgrid/gds.hpp"
#include "ffgrid/graph.hpp"
#include "ffgrid/latin.hpp"

#include <cstdint>
#include <optional>
#include <span>

namespace ffgrid {

// FF(K_p box K_q, lex) by direct replay, memoised. Thread-safe.
int ff_complete_product(int p, int q);

// 2^ceil(log2 n) for n >= 1.
int power_of_two_ceiling(int n);

// Factor-level data against the product First-Fit count.
struct ReductionReport {
    int p = 0;          // FF(G, sigma)
    int q = 0;          // FF(H, sigma')
    int ff_product = 0; // FF(G box H, lex), full product replay
    int ff_complete = 0; // FF(K_p box K_q, lex)
    std::optional<int> grundy_g;
    std::optional<int> grundy_h;
    std::optional<int> sum_bound;     // grundy_g + grundy_h - 1
    std::optional<int> square_bound;  // 2 grundy_g - 2, when G and H are the same graph
    std::optional<int> power_formula; // 2^ceil(log2 p), when (G, sigma) == (H, sigma')
    bool sum_bound_holds = true;
    bool square_bound_holds = true;
};

// Both sides of the complete-graph reduction are computed independently and
// must agree, as must the power-of-two formula when the factors coincide;
// either mismatch throws TheoremViolation. Grundy bounds are filled in when
// both factors fit caps.grundy and are reported, not enforced.
ReductionReport reduction_report(const OrderedGraph& g, const OrderedGraph& h, const Caps& caps = {});

// Lifts a GDS `cells` of the p x q rectangle r (p = FF(G), q = FF(H)) to the
// union of C_i x D_j over (i, j) in cells, where C_i, D_j are the First-Fit
// colour classes of the factors. The product colouring gives C_i x D_j the
// entry r(i, j). The certificate is replay-verified under lex and must use
// exactly q colours; otherwise TheoremViolation.
GdsCertificate lift_latin_gds(const OrderedGraph& g, const OrderedGraph& h, const LatinRectangle& r,
                              std::span<const Cell> cells);

// The product colouring used by lift_latin_gds.
Coloring lifted_coloring(const OrderedGraph& g, const OrderedGraph& h, const LatinRectangle& r);

struct ProductGdsBound {
    int p = 0, q = 0;
    int alpha_g = 0, alpha_h = 0;
    double bound = 0; // alpha(G) alpha(H) rectangle_gds_bound(p, q)
};

// Requires 2 <= p <= q and both factors within caps.independence.
ProductGdsBound product_gds_bound(const OrderedGraph& g, const OrderedGraph& h, const Caps& caps = {});

struct ProductGdsWitness {
    ProductGdsBound bound;
    CoverGdsResult rectangle;
    GdsCertificate lifted;
    bool within_bound = false;
};

// Cover-based GDS of r lifted to G box H, measured against the product bound.
ProductGdsWitness product_gds_witness(const OrderedGraph& g, const OrderedGraph& h, const LatinRectangle& r,
                                      const Caps& caps = {});

struct CorollaryVerdict {
    int chi = 0;                       // chi(G box G)
    int ff_product = 0;                // FF(G box G, lex)
    std::uint64_t colorings_scanned = 0;
    bool exhaustive = false;
    bool found_descent_free = false;
    bool holds = true; // found => ff_product == chi and chi is a power of two
};

// Looks for a descent-free proper chi-colouring of (G box G, lex): all of
// them when there are at most `exhaustive_limit`, otherwise `samples` random
// backtracking draws seeded by `seed`.
CorollaryVerdict corollary_check(const OrderedGraph& g, const Caps& caps = {}, std::uint64_t seed = 0,
                                 std::uint64_t exhaustive_limit = 200000, std::uint64_t samples = 2000);

} // namespace ffgrid
