#pragma once

#include <compare>
#include <functional>
#include <vector>

#include "reconf/errors.hpp"
#include "reconf/graph.hpp"

namespace reconf {

// Proper vertex colouring with colours 1..k.
struct Colouring {
  std::vector<int> assignment;  // assignment[v] in 1..k
  int k = 0;

  bool proper_on(const Graph& g) const;
  bool operator==(const Colouring& o) const { return assignment == o.assignment; }
  bool operator<(const Colouring& o) const { return assignment < o.assignment; }
};

// Visit every proper k-colouring in lexicographic order of the assignment
// vector; stop early if fn returns false.  The empty graph has exactly one
// (empty) colouring.  Throws Error(ResourceCap) past caps.max_colourings.
void for_each_colouring(const Graph& g, int k, const Caps& caps,
                        const std::function<bool(const std::vector<int>&)>& fn);

// All proper k-colourings, lexicographically ordered.
std::vector<Colouring> enumerate_colourings(const Graph& g, int k, const Caps& caps = {});

struct VertexMove {
  int vertex;
  int colour;
  Colouring result;
};

// All single-vertex recolourings of c that stay proper, ordered by (vertex,
// colour).  Throws Error(ImproperInput) if c is not proper on g.
std::vector<VertexMove> single_vertex_moves(const Graph& g, const Colouring& c);

// Swap the two colours c(v) and j on the component of v in the subgraph
// induced by those colour classes.  j == c(v) returns c unchanged.
Colouring kempe_swap(const Graph& g, const Colouring& c, int v, int j);

// Distinct colourings reachable from c by one Kempe swap (c excluded),
// sorted lexicographically.
std::vector<Colouring> kempe_moves(const Graph& g, const Colouring& c);

// Vertices whose closed neighbourhood sees all k colours in every proper
// k-colouring.  Full enumeration with early exit once every vertex is
// cleared.  Throws Error(NoColourings) if g has no proper k-colouring.
std::vector<int> frozen_vertices(const Graph& g, int k, const Caps& caps = {});

// Non-adjacent pairs (u < v) that receive distinct colours in every proper
// k-colouring.  Throws Error(NoColourings) if there are none.
std::vector<std::pair<int, int>> always_distinct_pairs(const Graph& g, int k,
                                                       const Caps& caps = {});

// True iff for every vertex some chi(g)-colouring gives it a colour used
// nowhere else.
bool unique_colour_property(const Graph& g, const Caps& caps = {});

}  // namespace reconf
