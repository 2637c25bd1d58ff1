#pragma once

#include <vector>

#include "reconf/errors.hpp"
#include "reconf/graph.hpp"

namespace reconf {

// Exact chromatic number: greedy clique lower bound, then iterative
// deepening on k with a backtracking colourability test (clique seeded,
// saturation-first vertex selection, colour symmetry breaking).  Empty
// graph: 0.  Throws Error(ResourceCap) past caps.search_nodes.
int chromatic_number(const Graph& g, const Caps& caps = {});

// Is there a proper k-colouring?  Same search as chromatic_number.
bool colourable(const Graph& g, int k, const Caps& caps = {});

// All independent sets of size >= min_size as sorted vertex vectors, in
// lexicographic order ([0] < [0,2] < [1]).  The empty set appears (first)
// iff min_size == 0.  Throws Error(ResourceCap) past caps.max_sets.
std::vector<std::vector<int>> independent_sets(const Graph& g, int min_size,
                                               const Caps& caps = {});

// Size of a largest independent set.
int independence_number(const Graph& g);

}  // namespace reconf
