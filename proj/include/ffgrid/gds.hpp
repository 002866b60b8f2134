#pragma once

#include "ffgrid/caps.hpp"
#include "ffgrid/descent.hpp"
#include "ffgrid/first_fit.hpp"
#include "ffgrid/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ffgrid {

struct SearchStats {
    std::uint64_t nodes = 0;   // branch-and-bound nodes
    std::uint64_t replays = 0; // First-Fit replays spent on verification
    std::size_t family_size = 0;
    int lower_bound = 0;
};

// A vertex subset S together with the target colouring it is meant to force.
// `verified` is true iff First-Fit subject to target|S reproduces target.
struct GdsCertificate {
    std::vector<int> domain;
    Precoloring pinned;
    Coloring target;
    int k = 0;
    bool verified = false;
    std::string method;
    SearchStats stats;
};

// Does First-Fit over `order` subject to target|domain give back `target`?
bool is_gds(const Graph& g, const Ordering& order, const Coloring& target, std::span<const int> domain);

GdsCertificate certify_gds(const Graph& g, const Ordering& order, const Coloring& target,
                           std::vector<int> domain, std::string method, SearchStats stats = {});

// Hitting sets over a family of vertex sets drawn from 0..universe-1.
std::vector<int> greedy_hitting_set(const std::vector<std::vector<int>>& family, int universe);
// Branch and bound on the most frequent element, pruned by a disjoint-set
// packing bound. Returns a minimum-cardinality hitting set, sorted.
std::vector<int> minimum_hitting_set(const std::vector<std::vector<int>>& family, int universe,
                                     SearchStats& stats);
// Number of pairwise disjoint sets found greedily; a lower bound for any hitting set.
int disjoint_packing_bound(const std::vector<std::vector<int>>& family, int universe);

enum class HittingMode { greedy, exact };

// S hits every descent of (g, order, c); the certificate is replay-verified.
// A hitting set that fails replay throws TheoremViolation. Exact mode throws
// CapExceeded above caps.hitting_family sets.
GdsCertificate hitting_set_gds(const Graph& g, const Ordering& order, const Coloring& c, HittingMode mode,
                               const Caps& caps = {});

struct MinimumGdsOptions {
    // Start the size sweep at the disjoint-descent packing bound. Sound because
    // a GDS must hit every descent: an unhit descent at v leaves its low colour
    // absent around v when v is scanned. Turn off to sweep from size 0.
    bool descent_floor = true;
};

// Smallest S whose replay reproduces c, by subsets in increasing size, each
// checked by full replay. Throws CapExceeded above caps.minimum_gds vertices.
GdsCertificate minimum_gds(const Graph& g, const Ordering& order, const Coloring& c, const Caps& caps = {},
                           MinimumGdsOptions options = {});

struct QuasiLexGdsCheck {
    std::uint64_t orderings = 0;
    bool colorings_identical = true; // FF(tau) == FF(lex) for every tau
    bool gds_under_lex = false;
    bool gds_invariant = true;       // GDS status of S equal under every tau
    std::vector<std::string> failures;

    bool holds() const noexcept { return colorings_identical && gds_invariant; }
};

// Runs every quasi-lexicographic ordering of G box H: First-Fit must
// reproduce the lex colouring and `domain` must be a GDS of `c` under every
// tau exactly when it is one under lex.
QuasiLexGdsCheck check_quasi_lex_gds_equivalence(const OrderedGraph& g, const OrderedGraph& h, const Coloring& c,
                                                 std::span<const int> domain, const Caps& caps = {});

} // namespace ffgrid
