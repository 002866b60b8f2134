#include "ffgrid/latin.hpp"

#include "ffgrid/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace ffgrid {

LatinRectangle::LatinRectangle(int rows, int cols, std::vector<int> cells) : p_(rows), q_(cols), cells_(std::move(cells))
{
    if (rows < 1 || cols < 1)
        throw Error("latin rectangle needs at least one row and column");
    if (rows > cols)
        throw Error("latin rectangle needs rows <= cols");
    if (static_cast<int>(cells_.size()) != rows * cols)
        throw Error("latin rectangle: cell count does not match shape");
    std::set<int> symbols(cells_.begin(), cells_.begin() + cols);
    if (static_cast<int>(symbols.size()) != cols || *symbols.begin() < 1)
        throw Error("latin rectangle: first row must hold q distinct positive entries");
    for (int i = 0; i < rows; ++i) {
        std::set<int> row(cells_.begin() + i * cols, cells_.begin() + (i + 1) * cols);
        if (row != symbols)
            throw Error("latin rectangle: row " + std::to_string(i) + " is not a permutation of the entry set");
    }
    for (int j = 0; j < cols; ++j) {
        std::set<int> col;
        for (int i = 0; i < rows; ++i)
            if (!col.insert(at(i, j)).second)
                throw Error("latin rectangle: column " + std::to_string(j) + " repeats an entry");
    }
}

LatinRectangle LatinRectangle::from_rows(const std::vector<std::vector<int>>& rows)
{
    if (rows.empty())
        throw Error("latin rectangle needs at least one row");
    std::vector<int> cells;
    for (const auto& row : rows) {
        if (row.size() != rows.front().size())
            throw Error("latin rectangle: ragged rows");
        cells.insert(cells.end(), row.begin(), row.end());
    }
    return LatinRectangle(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()), std::move(cells));
}

std::vector<std::vector<int>> LatinRectangle::to_rows() const
{
    std::vector<std::vector<int>> out(p_);
    for (int i = 0; i < p_; ++i)
        out[i].assign(cells_.begin() + i * q_, cells_.begin() + (i + 1) * q_);
    return out;
}

LatinInstance latin_instance(const LatinRectangle& r)
{
    return {cartesian_product(complete_graph(r.rows()), complete_graph(r.cols())),
            Ordering::identity(r.rows() * r.cols())};
}

namespace {

int side_for_level(int t, const Caps& caps)
{
    if (t < 0 || t > 30 || (1 << t) > caps.latin_side)
        throw CapExceeded("level " + std::to_string(t) + " gives a square above the side limit", "latin_side");
    return 1 << t;
}

LatinRectangle tensor(const LatinRectangle& a, const LatinRectangle& b)
{
    const int nb = b.rows();
    const int n = a.rows() * nb;
    std::vector<int> cells(n * n);
    for (int i1 = 0; i1 < a.rows(); ++i1)
        for (int j1 = 0; j1 < a.cols(); ++j1)
            for (int i2 = 0; i2 < nb; ++i2)
                for (int j2 = 0; j2 < nb; ++j2)
                    cells[(i1 * nb + i2) * n + (j1 * nb + j2)] = (a.at(i1, j1) - 1) * nb + b.at(i2, j2);
    return LatinRectangle(n, n, std::move(cells));
}

} // namespace

LatinRectangle cayley_table(int t, const Caps& caps)
{
    const int n = side_for_level(t, caps);
    std::vector<int> cells(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            cells[i * n + j] = (i ^ j) + 1;
    return LatinRectangle(n, n, std::move(cells));
}

LatinRectangle tensor_square(int k, const Caps& caps)
{
    side_for_level(k, caps);
    const LatinRectangle base = LatinRectangle::from_rows({{2, 1}, {1, 2}});
    LatinRectangle out = LatinRectangle::from_rows({{1}});
    for (int level = 0; level < k; ++level)
        out = tensor(base, out);
    return out;
}

LatinRectangle shift_entries(const LatinRectangle& l, int p)
{
    if (!l.is_square())
        throw Error("shift_entries needs a square");
    std::vector<int> cells(l.cells().begin(), l.cells().end());
    for (int& c : cells) {
        c += p;
        if (c < 1)
            throw Error("shift would produce a non-positive entry");
    }
    return LatinRectangle(l.rows(), l.cols(), std::move(cells));
}

std::vector<Descent> latin_descents(const LatinRectangle& r)
{
    const int p = r.rows(), q = r.cols();
    const int top = *std::max_element(r.cells().begin(), r.cells().end());
    // where[x] in row i / column j, -1 when absent
    std::vector<std::vector<int>> row_at(p, std::vector<int>(top + 1, -1));
    std::vector<std::vector<int>> col_at(q, std::vector<int>(top + 1, -1));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
            row_at[i][r.at(i, j)] = j;
            col_at[j][r.at(i, j)] = i;
        }
    std::vector<Descent> out;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
            const int y = r.at(i, j);
            for (int x = 1; x < y; ++x) {
                const int jj = row_at[i][x];
                const int ii = col_at[j][x];
                if ((jj != -1 && jj < j) || (ii != -1 && ii < i))
                    continue;
                Descent d{r.index(i, j), x, y, {}};
                if (jj != -1)
                    d.witnesses.push_back(r.index(i, jj));
                if (ii != -1)
                    d.witnesses.push_back(r.index(ii, j));
                out.push_back(std::move(d));
            }
        }
    return out;
}

Graph EntryGraph::entry_graph(int entry) const
{
    return union_graph.induced(positions.at(entry - 1));
}

EntryGraph entry_graph(const LatinRectangle& r)
{
    const int top = *std::max_element(r.cells().begin(), r.cells().end());
    EntryGraph out;
    out.positions.resize(top);
    for (int v = 0; v < static_cast<int>(r.cells().size()); ++v)
        out.positions[r.cells()[v] - 1].push_back(v);
    std::vector<Edge> edges;
    for (const auto& d : latin_descents(r))
        if (d.witnesses.size() == 2)
            edges.emplace_back(d.witnesses[0], d.witnesses[1]);
    out.union_graph = Graph(r.rows() * r.cols(), edges);
    return out;
}

double rectangle_gds_bound(int m, int n)
{
    if (m < 2)
        throw Error("rectangle GDS bound needs m >= 2");
    if (m > n)
        throw Error("rectangle GDS bound needs m <= n");
    const double md = m, nd = n;
    return nd * md - nd + md - 1 - md * std::log2(4 * md - 4) / 4;
}

CoverGdsResult rectangle_gds_via_cover(const LatinRectangle& r, const Caps& caps)
{
    const EntryGraph eg = entry_graph(r);
    CoverGdsResult out;
    std::vector<int> cover;
    for (const auto& cells : eg.positions) {
        if (cells.empty())
            continue;
        // vertex cover of G[e] = hitting set of its edges
        std::vector<std::vector<int>> edges;
        for (std::size_t a = 0; a < cells.size(); ++a)
            for (std::size_t b = a + 1; b < cells.size(); ++b)
                if (eg.union_graph.adjacent(cells[a], cells[b]))
                    edges.push_back({cells[a], cells[b]});
        if (edges.empty())
            continue;
        std::vector<int> part;
        if (static_cast<int>(cells.size()) <= caps.independence) {
            SearchStats stats;
            part = minimum_hitting_set(edges, r.rows() * r.cols(), stats);
        } else {
            part = greedy_hitting_set(edges, r.rows() * r.cols());
            out.exact_cover = false;
        }
        cover.insert(cover.end(), part.begin(), part.end());
    }
    std::sort(cover.begin(), cover.end());
    out.cover_size = static_cast<int>(cover.size());

    const LatinInstance inst = latin_instance(r);
    const Coloring target = r.as_coloring();
    out.raw_cover_verified = is_gds(inst.product.graph(), inst.lex, target, cover);

    std::vector<char> in_set(r.rows() * r.cols(), 0);
    for (int v : cover)
        in_set[v] = 1;
    std::vector<int> domain = cover;
    for (const auto& d : latin_descents(r)) {
        const bool hit = in_set[d.vertex]
                         || std::any_of(d.witnesses.begin(), d.witnesses.end(), [&](int w) { return in_set[w]; });
        if (!hit) {
            in_set[d.vertex] = 1;
            domain.push_back(d.vertex);
            ++out.augmented;
        }
    }
    out.certificate = certify_gds(inst.product.graph(), inst.lex, target, std::move(domain), "vertex-cover");
    if (!out.certificate.verified)
        throw TheoremViolation("vertex cover of G(R) failed to reproduce the rectangle");
    if (r.rows() >= 2)
        out.bound = rectangle_gds_bound(r.rows(), r.cols());
    return out;
}

std::vector<Cell> dk_construct(int k, const Caps& caps)
{
    if (k < 0 || k > caps.dk_level)
        throw CapExceeded("D_k construction at level " + std::to_string(k), "dk_level");
    if (k == 0)
        return {};
    if (k == 1)
        return {{1, 0}};
    static const std::vector<Cell> d2 = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 2}, {3, 0}};
    if (k == 2)
        return d2;

    const int b = 1 << (k - 2);
    std::vector<Cell> out;
    auto place = [&](int block_row, int block_col, const std::vector<Cell>& cells) {
        for (auto [i, j] : cells)
            out.emplace_back(block_row * b + i, block_col * b + j);
    };
    // Blocks under the boxed cells of D_2 are taken whole, except the block
    // at (2,2) which sits inside the south-east quadrant.
    std::vector<char> handled(16, 0);
    std::vector<Cell> whole_block;
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j)
            whole_block.emplace_back(i, j);
    for (auto [br, bc] : d2) {
        if (br == 2 && bc == 2)
            continue;
        place(br, bc, whole_block);
        handled[br * 4 + bc] = 1;
    }
    // south-east quadrant is L_(k-1) + 2^(k-1): D_(k-1) there
    for (auto [i, j] : dk_construct(k - 1, caps))
        out.emplace_back(2 * b + i, 2 * b + j);
    for (int br : {2, 3})
        for (int bc : {2, 3})
            handled[br * 4 + bc] = 1;
    // the seven remaining blocks are shifted copies of L_(k-2): D_(k-2) in each
    const auto inner = dk_construct(k - 2, caps);
    for (int block = 0; block < 16; ++block)
        if (!handled[block])
            place(block / 4, block % 4, inner);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t dk_count(int k)
{
    if (k < 0 || k > 31)
        throw Error("dk_count defined for 0 <= k <= 31");
    std::uint64_t prev2 = 0, prev1 = 1; // d_0, d_1
    if (k == 0)
        return 0;
    for (int level = 2; level <= k; ++level) {
        const std::uint64_t next = (std::uint64_t{1} << (2 * level - 2)) + (std::uint64_t{1} << (2 * level - 4))
                                   + prev1 + 7 * prev2;
        prev2 = prev1;
        prev1 = next;
    }
    return prev1;
}

double dk_closed_form(int k)
{
    const double s = std::sqrt(29.0);
    const double alpha = (1 - s) / 2;
    const double beta = (1 + s) / 2;
    const double n = std::ldexp(1.0, k);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return n * n - std::pow(n, std::log2(beta)) * (s + 5) / (2 * s)
           - sign * std::pow(n, std::log2(-alpha)) * (s - 5) / (2 * s);
}

std::uint64_t tensor_gds_lower_bound(int k)
{
    if (k < 2 || k > 31)
        throw Error("tensor GDS lower bound defined for 2 <= k <= 31");
    return 6 * (std::uint64_t{1} << (2 * (k - 2)));
}

namespace {

bool fill(std::vector<int>& cells, int p, int q, int pos, std::mt19937_64& rng)
{
    if (pos == p * q)
        return true;
    const int i = pos / q, j = pos % q;
    std::vector<int> symbols(q);
    std::iota(symbols.begin(), symbols.end(), 1);
    std::shuffle(symbols.begin(), symbols.end(), rng);
    for (int s : symbols) {
        bool clash = false;
        for (int jj = 0; jj < j && !clash; ++jj)
            clash = cells[i * q + jj] == s;
        for (int ii = 0; ii < i && !clash; ++ii)
            clash = cells[ii * q + j] == s;
        if (clash)
            continue;
        cells[pos] = s;
        if (fill(cells, p, q, pos + 1, rng))
            return true;
    }
    cells[pos] = 0;
    return false;
}

} // namespace

LatinRectangle random_latin_rectangle(int p, int q, std::mt19937_64& rng)
{
    if (p < 1 || p > q)
        throw Error("random latin rectangle needs 1 <= p <= q");
    std::vector<int> cells(p * q, 0);
    fill(cells, p, q, 0, rng);
    return LatinRectangle(p, q, std::move(cells));
}

std::string format_latin_csv(const LatinRectangle& r)
{
    std::ostringstream out;
    for (int i = 0; i < r.rows(); ++i) {
        for (int j = 0; j < r.cols(); ++j)
            out << (j ? "," : "") << r.at(i, j);
        out << '\n';
    }
    return out.str();
}

LatinRectangle parse_latin_csv(std::string_view text)
{
    std::vector<std::vector<int>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::vector<int> row;
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stoi(field, &used));
                if (field.find_first_not_of(" \t\r", used) != std::string::npos)
                    throw std::invalid_argument(field);
            } catch (const std::logic_error&) {
                throw ParseError("bad entry '" + field + "'", line_number);
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("row has " + std::to_string(row.size()) + " entries, expected "
                                 + std::to_string(rows.front().size()),
                             line_number);
        rows.push_back(std::move(row));
    }
    try {
        return LatinRectangle::from_rows(rows);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string format_dk_csv(const std::vector<Cell>& cells, const LatinRectangle& r)
{
    std::ostringstream out;
    for (auto [i, j] : cells)
        out << i << ',' << j << ',' << r.at(i, j) << '\n';
    return out.str();
}

} // namespace ffgrid
