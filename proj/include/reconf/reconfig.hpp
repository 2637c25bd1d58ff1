#pragma once

#include <string>
#include <vector>

#include "reconf/colouring.hpp"
#include "reconf/errors.hpp"
#include "reconf/graph.hpp"

namespace reconf {

// Sorted vertex set holding the tokens of one configuration.
using TokenSet = std::vector<int>;

enum class Kind { SingleVertex, Kempe, TJ, TS, TAR };

const char* kind_name(Kind kind);
Kind kind_from_name(const std::string& name);

// A reconfiguration graph.  Vertices are configurations in lexicographic
// label order; exactly one of colour_labels / token_labels is populated for
// labelled instances, both are empty after stripping.
struct ReconfigGraph {
  Kind kind = Kind::SingleVertex;
  int k = 0;  // colours, or token count for TJ/TS/TAR
  Graph graph;
  std::vector<Colouring> colour_labels;
  std::vector<TokenSet> token_labels;

  bool labelled() const { return !colour_labels.empty() || !token_labels.empty(); }
};

// Vertices: proper k-colourings; edges: colourings differing at exactly one
// vertex.
ReconfigGraph build_single(const Graph& g, int k, const Caps& caps = {});

// Vertices: proper k-colourings; edges: colourings one Kempe swap apart.
// Contains every edge of build_single(g, k).
ReconfigGraph build_kempe(const Graph& g, int k, const Caps& caps = {});

// Vertices: independent sets, of size exactly k (TJ, TS) or >= k (TAR).
// Edges: token jump (one token moved), token slide (moved along an edge of
// g), or addition/removal of one token.
ReconfigGraph build_token(const Graph& g, int k, Kind rule, const Caps& caps = {});

// Forget labels and relabel vertices by a seed-determined permutation
// (Fisher-Yates over mt19937_64, identical output for identical seeds on
// every platform).
Graph strip(const ReconfigGraph& r, unsigned long long seed);

}  // namespace reconf
