#pragma once

#include <optional>

#include "reconf/errors.hpp"
#include "reconf/graph.hpp"

namespace reconf {

struct LineRoot {
  enum class Status { Unique, AmbiguousTriangle, NotLineGraph };
  Status status = Status::NotLineGraph;
  std::optional<Graph> root;  // set iff status == Unique
};

// Root graph of a connected line graph, found by partitioning the edges
// into cliques with every vertex in at most two parts (Krausz).  The
// search enumerates all partitions and deduplicates roots up to
// isomorphism, so the classical triangle ambiguity (roots K_3 and K_{1,3})
// is reported rather than resolved; connected line graphs other than K_3
// have a unique root, so any other multi-root outcome indicates a bug and
// throws Error(RootAmbiguity).  Conventions: the empty graph roots to K_1, a
// single vertex to K_2.  Throws Error(NotConnected) on disconnected input
// and Error(ResourceCap) past caps.search_nodes.
LineRoot line_graph_root(const Graph& l, const Caps& caps = {});

}  // namespace reconf
