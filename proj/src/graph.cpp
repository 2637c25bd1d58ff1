#include "reconf/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "reconf/errors.hpp"

namespace reconf {

Graph::Graph(int n) {
  if (n < 0) throw Error(ErrorKind::PreconditionViolated, "graph order must be non-negative");
  adj_.resize(n);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n() || v >= n())
    throw Error(ErrorKind::PreconditionViolated, "edge endpoint out of range");
  if (u == v) throw Error(ErrorKind::PreconditionViolated, "loops are not allowed");
  auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
  if (it != adj_[u].end() && *it == v) return;  // already present
  adj_[u].insert(it, v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n() || v >= n() || u == v) return false;
  if (adj_[u].size() > adj_[v].size()) std::swap(u, v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n(); ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph edgeless(int n) { return Graph(n); }

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::PreconditionViolated, "cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph complement(const Graph& g) {
  Graph c(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

Graph complete_join(const Graph& g, const Graph& h) {
  const int ng = g.n();
  Graph j(ng + h.n());
  for (auto [u, v] : g.edges()) j.add_edge(u, v);
  for (auto [u, v] : h.edges()) j.add_edge(ng + u, ng + v);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < h.n(); ++v) j.add_edge(u, ng + v);
  return j;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n())
    throw Error(ErrorKind::PreconditionViolated, "permutation size mismatch");
  Graph p(g.n());
  for (auto [u, v] : g.edges()) p.add_edge(perm[u], perm[v]);
  return p;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> index(g.n(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) index[vertices[i]] = i;
  Graph s(static_cast<int>(vertices.size()));
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    for (int w : g.neighbours(vertices[i]))
      if (index[w] > i) s.add_edge(i, index[w]);
  return s;
}

std::vector<int> common_neighbours(const Graph& g, int u, int v) {
  const auto& a = g.neighbours(u);
  const auto& b = g.neighbours(v);
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  std::vector<char> seen(g.n(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbours(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
  }
  return count == g.n();
}

bool is_clique(const Graph& g, const std::vector<int>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.has_edge(vertices[i], vertices[j])) return false;
  return true;
}

std::vector<Component> connected_components(const Graph& g) {
  std::vector<Component> out;
  std::vector<char> seen(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> members;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      members.push_back(v);
      for (int w : g.neighbours(v))
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back({induced_subgraph(g, members), members});
  }
  return out;
}

LineGraphResult line_graph(const Graph& g) {
  auto es = g.edges();
  Graph l(static_cast<int>(es.size()));
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) l.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return {std::move(l), std::move(es)};
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ResourceCap: return "resource-cap";
    case ErrorKind::ImproperInput: return "improper-input";
    case ErrorKind::NoColourings: return "no-colourings";
    case ErrorKind::NotCliquePartition: return "not-clique-partition";
    case ErrorKind::EmptyInput: return "empty-input";
    case ErrorKind::NoLayering: return "no-layering";
    case ErrorKind::AmbiguousLayering: return "ambiguous-layering";
    case ErrorKind::InvalidComponent: return "invalid-component";
    case ErrorKind::UnsupportedCase: return "unsupported-case";
    case ErrorKind::NotConnected: return "not-connected";
    case ErrorKind::NotLineGraph: return "not-line-graph";
    case ErrorKind::NoFrozenVertex: return "no-frozen-vertex";
    case ErrorKind::PreconditionViolated: return "precondition-violated";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::RootAmbiguity: return "root-ambiguity";
  }
  return "unknown";
}

}  // namespace reconf
