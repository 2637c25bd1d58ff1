#pragma once

#include <optional>
#include <vector>

#include "reconf/graph.hpp"

namespace reconf {

struct IsoWitness {
  std::vector<int> mapping;  // vertex v of g -> mapping[v] of h
  bool verify(const Graph& g, const Graph& h) const;
};

// Isomorphism test: iterative colour refinement (degree / neighbour-colour
// multisets) to split the vertex sets, then backtracking over the refined
// classes.  Deterministic: the first witness in search order is returned.
std::optional<IsoWitness> is_isomorphic(const Graph& g, const Graph& h);

}  // namespace reconf
