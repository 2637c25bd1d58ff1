#pragma once

#include <utility>
#include <vector>

namespace reconf {

// Simple undirected graph on vertices 0..n-1.  Neighbour lists are kept
// sorted ascending with no duplicates; loops are rejected.  Treat instances
// as immutable values once built: every operation returns a new graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }

  void add_edge(int u, int v);  // idempotent; throws on loops / bad indices
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;

  // All edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

// Named small graphs.
Graph edgeless(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);   // n >= 3
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);

Graph complement(const Graph& g);

// Disjoint union of g and h plus every edge between them.  Vertices of g
// keep their indices; vertex v of h becomes g.n() + v.
Graph complete_join(const Graph& g, const Graph& h);

// Relabelled copy: vertex v of g becomes perm[v].
Graph permuted(const Graph& g, const std::vector<int>& perm);

// Subgraph induced on `vertices` (sorted ascending); vertex i of the result
// is vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

std::vector<int> common_neighbours(const Graph& g, int u, int v);

bool is_connected(const Graph& g);  // true for the empty graph
bool is_clique(const Graph& g, const std::vector<int>& vertices);

struct Component {
  Graph graph;
  std::vector<int> original;  // original[i] = index in the parent graph
};
// Components ordered by smallest original vertex; vertices inside a
// component keep their relative order.
std::vector<Component> connected_components(const Graph& g);

struct LineGraphResult {
  Graph graph;
  std::vector<std::pair<int, int>> vertex_edge;  // line vertex -> source edge
};
// Line graph: one vertex per edge of g, adjacent iff the edges share an
// endpoint.  Vertex order follows g.edges().
LineGraphResult line_graph(const Graph& g);

}  // namespace reconf
