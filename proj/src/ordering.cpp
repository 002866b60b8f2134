#include "ffgrid/ordering.hpp"

#include "ffgrid/error.hpp"

#include <sstream>

namespace ffgrid {

std::string_view to_string(OrderingKind kind)
{
    switch (kind) {
    case OrderingKind::lex:
        return "lex";
    case OrderingKind::quasi_lex:
        return "quasi-lex";
    case OrderingKind::arbitrary:
        break;
    }
    return "arbitrary";
}

ProductOrdering lex_ordering(const OrderedGraph& g, const OrderedGraph& h)
{
    const int rows = g.size(), cols = h.size();
    std::vector<int> scan;
    scan.reserve(rows * cols);
    for (int u : g.order().scan())
        for (int v : h.order().scan())
            scan.push_back(u * cols + v);
    return {Ordering::from_scan(std::move(scan)), OrderingKind::lex, rows, cols};
}

bool is_quasi_lex(const Ordering& tau, const OrderedGraph& g, const OrderedGraph& h)
{
    const int cols = h.size();
    if (tau.size() != g.size() * cols)
        throw Error("ordering size " + std::to_string(tau.size()) + " does not match product "
                    + std::to_string(g.size()) + "x" + std::to_string(cols));
    const auto& sg = g.order();
    const auto& sh = h.order();
    for (int i = 0; i < tau.size(); ++i) {
        const int a = tau.at(i);
        const int ra = sg.rank(a / cols), ca = sh.rank(a % cols);
        for (int j = i + 1; j < tau.size(); ++j) {
            const int b = tau.at(j);
            if (!(ra < sg.rank(b / cols) || ca < sh.rank(b % cols)))
                return false;
        }
    }
    return true;
}

namespace {

// Linear extensions of the rows x cols grid poset. A cell becomes available
// once the cells directly above and to the left (in factor rank) are placed.
class GridExtensions {
public:
    GridExtensions(const OrderedGraph& g, const OrderedGraph& h, std::uint64_t cap,
                   const std::function<void(const ProductOrdering&)>& visit)
        : g_(g), h_(h), rows_(g.size()), cols_(h.size()), cap_(cap), visit_(visit), filled_(rows_, 0)
    {
        scan_.reserve(rows_ * cols_);
    }

    std::uint64_t run()
    {
        extend();
        return count_;
    }

private:
    void extend()
    {
        if (static_cast<int>(scan_.size()) == rows_ * cols_) {
            if (count_ < cap_) {
                const auto tag = count_ == 0 ? OrderingKind::lex : OrderingKind::quasi_lex;
                visit_({Ordering::from_scan(scan_), tag, rows_, cols_});
            }
            ++count_;
            return;
        }
        // filled_[r] = number of placed cells in rank-row r; the placed set is a
        // staircase, so row r can grow iff the row above is strictly longer.
        for (int r = 0; r < rows_; ++r) {
            const int c = filled_[r];
            if (c == cols_ || (r > 0 && filled_[r - 1] <= c))
                continue;
            scan_.push_back(g_.order().at(r) * cols_ + h_.order().at(c));
            ++filled_[r];
            extend();
            --filled_[r];
            scan_.pop_back();
        }
    }

    const OrderedGraph& g_;
    const OrderedGraph& h_;
    int rows_, cols_;
    std::uint64_t cap_;
    const std::function<void(const ProductOrdering&)>& visit_;
    std::vector<int> filled_;
    std::vector<int> scan_;
    std::uint64_t count_ = 0;
};

} // namespace

std::uint64_t for_each_quasi_lex(const OrderedGraph& g, const OrderedGraph& h, std::uint64_t cap,
                                 const std::function<void(const ProductOrdering&)>& visit, const Caps& caps)
{
    if (g.size() * h.size() > caps.enumeration)
        throw CapExceeded("enumeration too large: product has " + std::to_string(g.size() * h.size()) + " vertices",
                          "enumeration");
    return GridExtensions(g, h, cap, visit).run();
}

QuasiLexEnumeration enumerate_quasi_lex(const OrderedGraph& g, const OrderedGraph& h, std::uint64_t cap,
                                        const Caps& caps)
{
    QuasiLexEnumeration out;
    out.count = for_each_quasi_lex(g, h, cap, [&](const ProductOrdering& o) { out.orderings.push_back(o); }, caps);
    return out;
}

std::string format_ordering(const Ordering& order)
{
    std::ostringstream out;
    out << "order:";
    for (int v : order.scan())
        out << ' ' << v;
    return out.str();
}

Ordering parse_ordering_line(std::string_view line, int line_number)
{
    constexpr std::string_view prefix = "order:";
    auto start = line.find_first_not_of(" \t");
    if (start == std::string_view::npos || line.substr(start, prefix.size()) != prefix)
        throw ParseError("expected 'order:' line", line_number);
    std::istringstream in{std::string(line.substr(start + prefix.size()))};
    std::vector<int> scan;
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            scan.push_back(std::stoi(token, &used));
            if (used != token.size())
                throw std::invalid_argument(token);
        } catch (const std::logic_error&) {
            throw ParseError("bad vertex '" + token + "' in ordering", line_number);
        }
    }
    try {
        return Ordering::from_scan(std::move(scan));
    } catch (const Error& e) {
        throw ParseError(e.what(), line_number);
    }
}

} // namespace ffgrid
