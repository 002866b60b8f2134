#pragma once

#include "ffgrid/caps.hpp"
#include "ffgrid/graph.hpp"

#include <span>
#include <string>
#include <vector>

namespace ffgrid {

// Total vertex colouring with colours 1..k, k the largest colour present.
// Properness is a property of a (graph, colouring) pair: see is_proper.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<int> colors);

    int size() const noexcept { return static_cast<int>(colors_.size()); }
    int color(int v) const { return colors_[v]; }
    int num_colors() const noexcept { return k_; }
    std::span<const int> colors() const noexcept { return colors_; }

    // classes()[c - 1] lists the vertices of colour c in increasing order.
    std::vector<std::vector<int>> classes() const;

    // Every colour 1..k occurs. Colourings produced under a precolouring may
    // skip colours when a pinned colour sits above everything greedy uses.
    bool uses_every_color() const;

    bool operator==(const Coloring& other) const = default;

private:
    std::vector<int> colors_;
    int k_ = 0;
};

bool is_proper(const Graph& g, const Coloring& c);

// Colours fixed on a vertex subset S before the scan.
class Precoloring {
public:
    Precoloring() = default;
    explicit Precoloring(int n) : colors_(n, 0) {}

    // Restriction of `c` to `domain`.
    static Precoloring restrict(const Coloring& c, std::span<const int> domain);

    void pin(int v, int color);
    bool pinned(int v) const { return colors_[v] != 0; }
    int color(int v) const { return colors_[v]; }
    int size() const noexcept { return static_cast<int>(colors_.size()); }

    // Pinned vertices in increasing order.
    std::vector<int> domain() const;

private:
    std::vector<int> colors_;
};

Coloring first_fit(const Graph& g, const Ordering& order);

// Pinned vertices keep their colours and are skipped by the scan, but they
// are visible as coloured neighbours from the first step on. Throws Error
// "precoloring conflict" when two adjacent pins share a colour.
Coloring first_fit_with_precoloring(const Graph& g, const Ordering& order, const Precoloring& pre);

// Max over all orderings of FF(G, order). Uses the ordering sweep up to
// caps.grundy_exhaustive vertices and the partition search up to caps.grundy.
int grundy_number(const Graph& g, const Caps& caps = {});

// The two exact routes, exposed so they can be checked against each other.
int grundy_number_by_orderings(const Graph& g, const Caps& caps = {});
int grundy_number_by_partitions(const Graph& g, const Caps& caps = {});

struct GrundyWitness {
    Ordering order;
    Coloring coloring;
};

// An ordering of K_m box K_n (m < n) on which First-Fit uses m + n - 1 colours:
// the first n - 1 columns carry the cyclic pattern (i + j + 1) mod (n - 1)
// (0-based, 0 read as n - 1) scanned class by class, then the last column
// top-down. `coloring` is the replayed First-Fit colouring.
GrundyWitness grundy_witness_km_kn(int m, int n);

// "colors: c0 c1 ..."
std::string format_colors(const Coloring& c);
// rows x cols integer grid, comma separated, one row per line.
std::string format_grid(const Coloring& c, int rows, int cols);

} // namespace ffgrid
