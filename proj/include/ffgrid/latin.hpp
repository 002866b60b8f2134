#pragma once

#include "ffgrid/caps.hpp"
#include "ffgrid/descent.hpp"
#include "ffgrid/first_fit.hpp"
#include "ffgrid/gds.hpp"
#include "ffgrid/graph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ffgrid {

using Cell = std::pair<int, int>; // (row, col), 0-based

// p x q array (p <= q), rows and columns without repeats, every row drawn
// from the same q-element entry set. Normalised rectangles use 1..q; shifted
// squares (L + p) use p+1..p+q.
class LatinRectangle {
public:
    LatinRectangle() = default;
    // Throws Error when the array is not Latin.
    LatinRectangle(int rows, int cols, std::vector<int> cells);
    static LatinRectangle from_rows(const std::vector<std::vector<int>>& rows);

    int rows() const noexcept { return p_; }
    int cols() const noexcept { return q_; }
    bool is_square() const noexcept { return p_ == q_; }
    int at(int i, int j) const { return cells_[i * q_ + j]; }
    int index(int i, int j) const noexcept { return i * q_ + j; }
    std::span<const int> cells() const noexcept { return cells_; }
    std::vector<std::vector<int>> to_rows() const;

    // Colouring of K_p box K_q under the row-major vertex indexing.
    Coloring as_coloring() const { return Coloring(cells_); }

    bool operator==(const LatinRectangle& other) const = default;

private:
    int p_ = 0;
    int q_ = 0;
    std::vector<int> cells_;
};

// K_p box K_q together with its lex ordering (which is the identity on indices).
struct LatinInstance {
    ProductGraph product;
    Ordering lex;
};
LatinInstance latin_instance(const LatinRectangle& r);

// C_t[i][j] = (i xor j) + 1, side 2^t.
LatinRectangle cayley_table(int t, const Caps& caps = {});

// k-fold tensor power of [[2,1],[1,2]]; side 2^k.
LatinRectangle tensor_square(int k, const Caps& caps = {});

LatinRectangle shift_entries(const LatinRectangle& l, int p);

// Descents of r read as a colouring of (K_p box K_q, lex), computed straight
// from the array: for entry y at (i,j) and x < y, x is found at most once to
// the right in row i and at most once in column j; it is a descent when each
// occurrence lies after (i,j). Same order and content as find_descents.
std::vector<Descent> latin_descents(const LatinRectangle& r);

// G[i] per entry plus the union G(R) on all cells (cell index = row * q + col).
struct EntryGraph {
    Graph union_graph;
    std::vector<std::vector<int>> positions; // positions[e - 1]: cells holding entry e
    Graph entry_graph(int entry) const;      // G[entry] on positions[entry - 1]
};

// Two cells holding the same entry are adjacent iff they are the two
// witnesses of one descent.
EntryGraph entry_graph(const LatinRectangle& r);

struct CoverGdsResult {
    GdsCertificate certificate;
    int cover_size = 0;          // vertex cover of G(R)
    int augmented = 0;           // cells added for 1-witness descents
    bool exact_cover = true;     // every G[i] covered optimally
    bool raw_cover_verified = false;
    double bound = 0;            // rectangle_gds_bound(p, q); 0 when p < 2
};

// Vertex cover of G(R) (exact per G[i] while the entry graphs fit the
// independence cap, greedy otherwise), plus the top cell of every descent the
// cover misses, pinned from r and replay-verified. Replay failure throws
// TheoremViolation.
CoverGdsResult rectangle_gds_via_cover(const LatinRectangle& r, const Caps& caps = {});

// nm - n + m - 1 - m log2(4m - 4) / 4 for an m x n rectangle, 2 <= m <= n.
double rectangle_gds_bound(int m, int n);

// D_k cells, 0-based, sorted.
std::vector<Cell> dk_construct(int k, const Caps& caps = {});

// d_0 = 0, d_1 = 1, d_k = 4^(k-1) + 4^(k-2) + d_(k-1) + 7 d_(k-2). k <= 31.
std::uint64_t dk_count(int k);
// n^2 - n^log2(beta) (sqrt29 + 5)/(2 sqrt29) - (-1)^k n^log2(-alpha) (sqrt29 - 5)/(2 sqrt29), n = 2^k.
double dk_closed_form(int k);

// 6 * 4^(k-2), the minimum GDS size forced in L_k.
std::uint64_t tensor_gds_lower_bound(int k);

// Randomised backtracking fill with entries 1..q; not uniform over all rectangles.
LatinRectangle random_latin_rectangle(int p, int q, std::mt19937_64& rng);

// CSV, one row per line.
std::string format_latin_csv(const LatinRectangle& r);
LatinRectangle parse_latin_csv(std::string_view text);
// "row,col,entry" per line, 0-based positions and 1-based entries.
std::string format_dk_csv(const std::vector<Cell>& cells, const LatinRectangle& r);

} // namespace ffgrid
