#pragma once

#include "ffgrid/first_fit.hpp"
#include "ffgrid/graph.hpp"

#include <random>
#include <vector>

namespace ffgrid {

// G(n, p).
Graph random_graph(int n, double p, std::mt19937_64& rng);

Ordering random_ordering(int n, std::mt19937_64& rng);

// Visits vertices in random order and gives each a uniformly random colour
// from 1..palette not used by a coloured neighbour (palette 0 means
// max degree + 1), then relabels colours to 1..k keeping their relative order.
Coloring random_proper_coloring(const Graph& g, std::mt19937_64& rng, int palette = 0);

// One representative per isomorphism class of connected graphs on
// 1..max_n vertices (max_n <= 6), ordered by vertex count then edge count.
std::vector<Graph> connected_graphs(int max_n);

} // namespace ffgrid
