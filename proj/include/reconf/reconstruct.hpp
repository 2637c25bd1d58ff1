#pragma once

#include <optional>
#include <vector>

#include "reconf/errors.hpp"
#include "reconf/graph.hpp"
#include "reconf/reconfig.hpp"

namespace reconf {

// Candidate built from one vertex of an unlabelled reconfiguration graph.
struct CandidateGraph {
  Graph graph;
  int source_vertex = -1;
  std::vector<int> clique_sizes;  // one entry per candidate vertex
};

// Connected components of the neighbourhood of c, each verified to be a
// clique, ordered by smallest member.  Throws Error(NotCliquePartition) if a
// component is not a clique.
std::vector<std::vector<int>> neighbourhood_cliques(const Graph& r, int c);

// True iff some a in a_clique and b in b_clique have no common neighbour
// other than c.  In a recolouring graph that witnesses an edge between the
// two recoloured vertices.
bool star_fails(const Graph& r, int c, const std::vector<int>& a_clique,
                const std::vector<int>& b_clique);

// Candidate from vertex c of a single-vertex recolouring graph: one vertex
// per neighbourhood clique, edges where star_fails.  Always a subgraph of
// the hidden graph; exact when c's hidden colouring leaves a colour unused.
CandidateGraph candidate_single(const Graph& r, int c);

// Candidate with the largest (vertex count, edge count), smallest source
// vertex winning ties.  Throws Error(EmptyInput) on the empty graph.
Graph reconstruct_single(const Graph& r);

// Same construction as candidate_single; only inspects vertices within
// distance 2 of c.  Suited to the regime where every candidate is exact.
Graph candidate_single_fast(const Graph& r, int c);

// True iff no x completes the double-triangle pattern for the pair (a, b):
// a common neighbour x != c of a and b together with triangles {x, a, a'}
// and {x, b, b'}.  In a Kempe graph the pattern exists precisely when the
// two recoloured vertices can be proven non-adjacent.
bool tstar_fails(const Graph& r, int c, int a, int b);

// Kempe candidate from vertex c: neighbourhood components of size >= 2
// (verified cliques; singletons are indistinguishable from non-trivial
// swaps and are discarded), edges where some pair fails the double-triangle
// pattern.
CandidateGraph candidate_kempe(const Graph& r, int c);

// Kempe analogue of reconstruct_single.
Graph reconstruct_kempe(const Graph& r);

// Kempe analogue of candidate_single_fast.
Graph candidate_kempe_fast(const Graph& r, int c);

// Token addition/removal with threshold 0: the configuration holding every
// token has maximum degree; two neighbours of it are adjacent in the hidden
// graph iff they have no other common neighbour.
Graph reconstruct_tar0(const Graph& r);

struct Layering {
  std::vector<std::vector<int>> layers;  // layers[i] = layer i+1, ascending
};

// Unique valid layering of a connected component of a TAR threshold-1
// graph: layers independent, edges only between consecutive layers, a layer
// i >= 2 vertex has exactly i neighbours below, and two vertices of a layer
// share at most one neighbour in each adjacent layer.  Search roots at a
// minimum-degree vertex and tries root layers 1..deg+1 ascending; it is
// exhaustive, so uniqueness is checked, not assumed.  Throws
// Error(NoLayering) / Error(AmbiguousLayering).
Layering find_layering(const Graph& component);

// Token addition/removal with threshold 1.  Components map to join factors:
// isolated vertices to K_1, cycles C_{2i} (i >= 4) to the complement of
// C_i, C_4 and C_6 are impossible (Error(InvalidComponent)), everything
// else through find_layering (factor vertices = bottom layer, factor edges
// where two bottom vertices have no common neighbour in layer 2).  The
// empty graph returns the empty graph (its only preimage).  With
// self_check, each factor's rebuilt component is compared back.
Graph reconstruct_tar1(const Graph& r, bool self_check = false, const Caps& caps = {});

// Dispatch for the token cases with a reconstruction guarantee: token
// sliding with k = 1 (the input is the hidden graph) and TAR with k = 0 or
// 1.  Anything else throws Error(UnsupportedCase).
Graph reconstruct_token_trivial(const Graph& r, Kind rule, int k, const Caps& caps = {});

// Result of token-jumping reconstruction with k = 2: either a unique graph
// or, for a triangle input, the two possible preimages.
struct Tj2Result {
  std::optional<Graph> unique;
  std::vector<Graph> ambiguous_preimages;  // non-empty iff the input is K_3
};

// Token jumping with k = 2: the input is the line graph of the complement,
// so recover the line graph root and complement it.  Throws
// Error(NotConnected) / Error(NotLineGraph).
Tj2Result reconstruct_tj2(const Graph& r, const Caps& caps = {});

}  // namespace reconf
