#pragma once

#include "ffgrid/first_fit.hpp"
#include "ffgrid/graph.hpp"

#include <span>
#include <string>
#include <vector>

namespace ffgrid {

// v has colour high_color; witnesses are ALL neighbours of v coloured
// low_color, and every one of them is scanned after v. No witnesses means
// colour low_color does not occur around v at all.
struct Descent {
    int vertex = 0;
    int low_color = 0;
    int high_color = 0;
    std::vector<int> witnesses; // increasing vertex index

    bool operator==(const Descent& other) const = default;
};

// Every (C, order)-descent, sorted by rank of v then by low colour.
// Throws Error when `c` is not a proper colouring of `g`.
std::vector<Descent> find_descents(const Graph& g, const Ordering& order, const Coloring& c);

bool is_descent_free(const Graph& g, const Ordering& order, const Coloring& c);

// The sets {v} u N, each sorted, duplicates removed, in first-seen order.
std::vector<std::vector<int>> descent_family(std::span<const Descent> descents);

struct TheoremCheck {
    bool applicable = false; // the hypothesis held on this instance
    bool holds = true;       // the conclusion held (vacuously when not applicable)
    std::string detail;
};

// If `c` is descent-free under `order`, First-Fit over `order` must
// reproduce `c` colour for colour.
TheoremCheck check_descent_free_theorem(const Graph& g, const Ordering& order, const Coloring& c);

} // namespace ffgrid
