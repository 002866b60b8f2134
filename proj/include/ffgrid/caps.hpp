#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace ffgrid {

// Hard size limits for the exact searches. Everything exponential in the
// library checks one of these and throws CapExceeded instead of running away.
struct Caps {
    int max_vertices = 4096;           // any Graph
    int independence = 20;             // independence_number
    int chromatic = 16;                // chromatic_number
    int grundy_exhaustive = 9;         // grundy_number over all orderings
    int grundy = 12;                   // grundy_number via partition search
    int enumeration = 16;              // enumerate_quasi_lex product size
    std::size_t hitting_family = 100000; // exact hitting set: descent sets
    int minimum_gds = 16;              // minimum_gds vertex count
    int latin_side = 4096;             // cayley_table / tensor_square side
    int dk_level = 6;                  // dk_construct
    int corollary = 16;                // corollary_check product size
};

// Parses "key=value,key=value" on top of `base`. Keys are the field names
// above. Unknown keys and non-numeric values throw ParseError.
Caps parse_caps(std::string_view spec, Caps base = {});

// Applies FFGRID_CAP_OVERRIDE from the environment when it is set.
Caps caps_from_environment(Caps base = {});

std::string format_caps(const Caps& caps);

} // namespace ffgrid
