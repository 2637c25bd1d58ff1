#include "reconf/line_root.hpp"

#include <algorithm>
#include <map>

#include "reconf/iso.hpp"

namespace reconf {

namespace {

struct KrauszSearch {
  const Graph& l;
  long long budget;
  long long nodes = 0;
  std::vector<std::pair<int, int>> edge_list;
  std::map<std::pair<int, int>, int> edge_id;
  std::vector<char> covered;              // by edge id
  std::vector<int> part_count;            // parts containing each vertex
  std::vector<std::vector<int>> parts;    // current partition (vertex sets)
  std::vector<Graph> roots;               // pairwise non-isomorphic
  bool done = false;

  KrauszSearch(const Graph& l_, long long budget_)
      : l(l_), budget(budget_), edge_list(l_.edges()) {
    for (int i = 0; i < static_cast<int>(edge_list.size()); ++i) edge_id[edge_list[i]] = i;
    covered.assign(edge_list.size(), 0);
    part_count.assign(l.n(), 0);
  }

  int id(int u, int v) const { return edge_id.at(std::minmax(u, v)); }

  bool edge_free(int u, int v) const { return !covered[id(u, v)]; }

  void cover_part(const std::vector<int>& part, char value) {
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j)
        covered[id(part[i], part[j])] = value;
    for (int v : part) part_count[v] += value ? 1 : -1;
  }

  Graph build_root() const {
    std::vector<std::vector<int>> parts_of(l.n());
    for (int p = 0; p < static_cast<int>(parts.size()); ++p)
      for (int v : parts[p]) parts_of[v].push_back(p);
    int extra = static_cast<int>(parts.size());
    Graph root(extra + static_cast<int>(std::count_if(
                           parts_of.begin(), parts_of.end(),
                           [](const std::vector<int>& ps) { return ps.size() == 1; })));
    for (int v = 0; v < l.n(); ++v) {
      if (parts_of[v].size() == 2) root.add_edge(parts_of[v][0], parts_of[v][1]);
      else root.add_edge(parts_of[v][0], extra++);
    }
    return root;
  }

  void record_root() {
    Graph root = build_root();
    for (const Graph& known : roots)
      if (is_isomorphic(root, known)) return;
    roots.push_back(std::move(root));
    if (roots.size() >= 2) done = true;  // second distinct root settles the outcome
  }

  // Extend the part under construction with further common neighbours, then
  // recurse on the rest of the edge set.
  void grow_part(std::vector<int>& part, const std::vector<int>& pool, std::size_t from) {
    if (done) return;
    cover_part(part, 1);
    bool fits = true;
    for (int v : part)
      if (part_count[v] > 2) { fits = false; break; }
    if (fits) {
      parts.push_back(part);
      dfs();
      parts.pop_back();
    }
    cover_part(part, 0);
    for (std::size_t i = from; i < pool.size() && !done; ++i) {
      int w = pool[i];
      bool ok = part_count[w] < 2;
      for (int v : part) {
        if (!ok) break;
        if (!l.has_edge(v, w) || !edge_free(v, w)) ok = false;
      }
      if (!ok) continue;
      part.push_back(w);
      grow_part(part, pool, i + 1);
      part.pop_back();
    }
  }

  void dfs() {
    if (done) return;
    if (++nodes > budget)
      throw Error(ErrorKind::ResourceCap, "line graph root search budget exceeded");
    int first = -1;
    for (int e = 0; e < static_cast<int>(covered.size()); ++e)
      if (!covered[e]) { first = e; break; }
    if (first == -1) {
      record_root();
      return;
    }
    auto [u, v] = edge_list[first];
    if (part_count[u] >= 2 || part_count[v] >= 2) return;  // cannot be covered
    std::vector<int> pool;
    for (int w : common_neighbours(l, u, v))
      if (part_count[w] < 2 && edge_free(u, w) && edge_free(v, w)) pool.push_back(w);
    std::vector<int> part{std::min(u, v), std::max(u, v)};
    grow_part(part, pool, 0);
  }
};

}  // namespace

LineRoot line_graph_root(const Graph& l, const Caps& caps) {
  if (l.n() == 0) return {LineRoot::Status::Unique, complete_graph(1)};
  if (!is_connected(l)) throw Error(ErrorKind::NotConnected, "line graph root needs a connected input");
  if (l.n() == 1) return {LineRoot::Status::Unique, complete_graph(2)};
  if (l.n() == 3 && l.edge_count() == 3)
    return {LineRoot::Status::AmbiguousTriangle, std::nullopt};

  KrauszSearch search(l, caps.search_nodes);
  search.dfs();
  if (search.roots.empty()) return {LineRoot::Status::NotLineGraph, std::nullopt};
  if (search.roots.size() > 1)
    throw Error(ErrorKind::RootAmbiguity,
                "edge clique partitions produced non-isomorphic roots");
  return {LineRoot::Status::Unique, std::move(search.roots.front())};
}

}  // namespace reconf
