#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reconf/colouring.hpp"
#include "reconf/graph.hpp"
#include "reconf/iso.hpp"
#include "reconf/reconfig.hpp"

namespace reconf {

// Mycielskian M(G).  For an input on vertices 0..n-1 the result has 2n+1
// vertices: 0..n-1 copy the input ("v-block"), n..2n-1 are the shadow
// vertices ("u-block", u_i = n+i), and 2n is the apex w.  Edges: all input
// edges; u_i ~ v_j and u_j ~ v_i for every input edge ij; w ~ u_i for all i.
// M(G) raises the chromatic number by one while keeping the clique number
// (for inputs with an edge) and preserving triangle-freeness.
Graph mycielskian(const Graph& g);

// M^t(G): t-fold iteration, t >= 0.
Graph iterated_mycielskian(const Graph& g, int t);

// A pair (g, h) where h adds one true twin of a frozen vertex of g: the new
// vertex n(g) receives exactly the neighbours of the first frozen vertex of
// (g, k).  Both graphs then have identical k-colouring reconfiguration
// behaviour on the shared vertex set, while |V| differs.  Throws
// Error(NoFrozenVertex) when (g, k) has no frozen vertex, and propagates
// Error(NoColourings) when g has no proper k-colouring at all.
std::pair<Graph, Graph> frozen_twin(const Graph& g, int k, const Caps& caps = {});

// Family of pairwise non-isomorphic graphs with one common chromatic number
// chi and literally identical labelled recolouring graphs at k = chi.
//
// The base graph consists of four blocks laid out in this vertex order:
//   H_0                      (any graph with chromatic number < chi - p)
//   H_1 = M^(p-3)(C_5)       (chromatic number p)
//   H_2 = M^(chi-p-3)(C_5)   (chromatic number chi - p)
//   H_3                      (any graph with chromatic number < p)
// joined completely H_0-H_1, H_1-H_2, H_2-H_3.  Members of the family add
// arbitrary extra edges between H_0 and H_3; every chi-colouring gives H_0
// and H_3 colour sets that already always differ, so the extra edges never
// invalidate a colouring or change any recolouring step.
struct FamilySpec {
  int chi = 6;
  int p = 3;
  Graph h0;
  Graph h3;
  std::vector<std::pair<int, int>> extra_edges;  // (index in h0, index in h3)
};

// Offsets of the four blocks inside a built family member, plus the member
// itself.
struct FamilyMember {
  Graph graph;
  int offset_h0 = 0;
  int offset_h1 = 0;
  int offset_h2 = 0;
  int offset_h3 = 0;
};

// Builds one family member.  Requires chi >= 6 and 3 <= p <= chi - 3, and
// verifies the chromatic bounds on h0/h3; violations throw
// Error(PreconditionViolated) naming the failing bound.  Extra edge indices
// are range-checked against h0/h3.
FamilyMember join_chain_member(const FamilySpec& spec, const Caps& caps = {});

// Spare-colour family: for chi >= 4, a sequence G_0, G_1, G_2, ... of graphs with
// strictly growing vertex counts whose recolouring graphs at every k are
// isomorphic.  Let H = M^(chi-4)(C_5) with n vertices.  G_0 adds vertices
// u_1..u_n with u_a adjacent to every H-vertex except v_a; G_i further adds i
// vertices adjacent to all of H.  Every proper k-colouring leaves at least
// one H-vertex colour repeated on no other H-vertex... (the u-row forces the
// H-block to use at least 3 colours, while the extra vertices only need a
// colour unused on H, which always exists and moves freely).
Graph spare_colour_member(int chi, int extra, const Caps& caps = {});

// Number of vertices of the H block inside spare_colour_member(chi, ...).
int spare_colour_core_size(int chi);

// g joined completely to a padding block h with independence number at most
// k - 1.  Padding vertices can never carry a token in a size->= k independent
// set together with the join, so the k-token reconfiguration graphs of g and
// of the join coincide labelled-identically on g's token sets.  Requires
// k >= 2; throws Error(PreconditionViolated) when alpha(h) > k - 1.
Graph join_padding(const Graph& g, int k, const Graph& h);

// Outcome of comparing the reconfiguration graphs of two input graphs.
struct ReconfigComparison {
  bool labels_equal = false;      // same label sets in the same order
  bool equal_labelled = false;    // identical labelled reconfiguration graphs
  bool isomorphic = false;
  std::string method;             // "labelled-equality", "restriction-bijection",
                                  // or "isomorphism-search"
  std::optional<IsoWitness> witness;
  int left_vertices = 0;
  int right_vertices = 0;
  int left_edges = 0;
  int right_edges = 0;
};

// Builds the (kind, k) reconfiguration graphs of g and h and compares them.
// When the label sets coincide the comparison is exact on labels; otherwise,
// for colouring kinds with g smaller than h, a restriction bijection
// (colourings of h restricted to g's vertices) is attempted before falling
// back to a full isomorphism search.
ReconfigComparison verify_same_reconfig(const Graph& g, const Graph& h, Kind kind,
                                        int k, const Caps& caps = {});

}  // namespace reconf
