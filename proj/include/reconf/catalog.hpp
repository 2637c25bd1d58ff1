#pragma once

#include <vector>

#include "reconf/errors.hpp"
#include "reconf/graph.hpp"

namespace reconf {

// One representative per isomorphism class for every vertex count from 0 to
// n_max inclusive, ordered by vertex count and then by canonical adjacency
// bitmask.  Each representative is the member of its class whose edge bitmask
// (edges indexed in sorted pair order) is smallest over all vertex
// relabellings.  Class counts per vertex count: 1, 1, 2, 4, 11, 34, 156.
// Sizes beyond 6 throw Error(ResourceCap).
std::vector<Graph> graph_catalog(int n_max);

}  // namespace reconf
