#pragma once

#include "ffgrid/caps.hpp"
#include "ffgrid/graph.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ffgrid {

enum class OrderingKind { lex, quasi_lex, arbitrary };

std::string_view to_string(OrderingKind kind);

// A scan order over the vertices of a rows x cols product (row-major indices).
struct ProductOrdering {
    Ordering order;
    OrderingKind kind = OrderingKind::arbitrary;
    int rows = 0;
    int cols = 0;
};

// Rows in sigma order, each row scanned in sigma' order.
ProductOrdering lex_ordering(const OrderedGraph& g, const OrderedGraph& h);

// True iff tau(a) < tau(b) implies sigma(u) < sigma(u') or sigma'(v) < sigma'(v')
// for every pair a = (u,v), b = (u',v'). Equivalently, tau is a linear
// extension of the coordinatewise order on (sigma-rank, sigma'-rank).
// Pairwise check, quadratic in the product size.
bool is_quasi_lex(const Ordering& tau, const OrderedGraph& g, const OrderedGraph& h);

// Walks every quasi-lexicographic ordering of G box H exactly once and
// returns the exact total. `visit` sees the first `cap` of them only.
// Throws CapExceeded when the product has more than caps.enumeration vertices.
std::uint64_t for_each_quasi_lex(const OrderedGraph& g, const OrderedGraph& h, std::uint64_t cap,
                                 const std::function<void(const ProductOrdering&)>& visit, const Caps& caps = {});

struct QuasiLexEnumeration {
    std::vector<ProductOrdering> orderings;
    std::uint64_t count = 0;
    bool truncated() const noexcept { return orderings.size() < count; }
};

QuasiLexEnumeration enumerate_quasi_lex(const OrderedGraph& g, const OrderedGraph& h,
                                        std::uint64_t cap = UINT64_MAX, const Caps& caps = {});

// "order: v0 v1 ..." with vertices listed in scan order.
std::string format_ordering(const Ordering& order);
Ordering parse_ordering_line(std::string_view line, int line_number = 0);

} // namespace ffgrid
