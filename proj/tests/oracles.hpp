// Slow, independent re-implementations used to cross-check the library.
// Everything here favours obviousness over speed: permutations are tried one
// by one, subsets come from bitmasks, and counts use deletion-contraction.
#pragma once

#include <vector>

#include "reconf/colouring.hpp"
#include "reconf/graph.hpp"

namespace oracle {

using reconf::Colouring;
using reconf::Graph;

// Tries every vertex bijection.  Intended for graphs with at most 8 vertices.
bool isomorphic(const Graph& g, const Graph& h);

// Smallest k admitting a proper colouring, found by testing all k^n maps.
int chromatic(const Graph& g);

// Number of proper k-colourings, via deletion-contraction on simple graphs.
long long colouring_count(const Graph& g, int k);

// Independent sets with at least min_size vertices, one sorted vertex list
// per set, in increasing bitmask order.
std::vector<std::vector<int>> independent_sets(const Graph& g, int min_size);

// Whether b arises from a by swapping the two colours on exactly one maximal
// connected component of the subgraph induced by a pair of colours.
bool kempe_adjacent(const Graph& g, const Colouring& a, const Colouring& b);

// Every layer assignment on a connected graph satisfying: adjacent vertices
// sit in consecutive layers; layers run 1..top with none empty; a vertex in
// layer L >= 2 has exactly L neighbours one layer down; two vertices in one
// layer share at most one neighbour in the layer above and at most one below.
// Plain depth-first enumeration over vertex order.
std::vector<std::vector<int>> layerings(const Graph& g);

// All connected graphs on at most max_n vertices whose line graph is
// isomorphic to l, deduplicated up to isomorphism.
std::vector<Graph> line_roots(const Graph& l, int max_n);

// Vertices are the permutations of 0..k-1 in lexicographic order; two are
// adjacent when they differ in exactly two positions.
Graph transposition_cayley(int k);

}  // namespace oracle
