#include "reconf/reconstruct.hpp"

#include <algorithm>
#include <numeric>

#include "reconf/iso.hpp"
#include "reconf/line_root.hpp"

namespace reconf {

std::vector<std::vector<int>> neighbourhood_cliques(const Graph& r, int c) {
  const auto& nb = r.neighbours(c);
  std::vector<int> index(r.n(), -1);
  for (int i = 0; i < static_cast<int>(nb.size()); ++i) index[nb[i]] = i;
  std::vector<char> seen(nb.size(), 0);
  std::vector<std::vector<int>> cliques;
  for (int i = 0; i < static_cast<int>(nb.size()); ++i) {
    if (seen[i]) continue;
    std::vector<int> comp;
    std::vector<int> stack{i};
    seen[i] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(nb[x]);
      for (int w : r.neighbours(nb[x])) {
        int wi = index[w];
        if (wi >= 0 && !seen[wi]) {
          seen[wi] = 1;
          stack.push_back(wi);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    if (!is_clique(r, comp))
      throw Error(ErrorKind::NotCliquePartition,
                  "neighbourhood component is not a clique");
    cliques.push_back(std::move(comp));
  }
  // BFS over ascending neighbour indices already yields components ordered
  // by smallest member, but keep it explicit.
  std::sort(cliques.begin(), cliques.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return cliques;
}

namespace {

// Is there a common neighbour of a and b other than c?
bool have_common_neighbour_except(const Graph& r, int a, int b, int c) {
  const auto& na = r.neighbours(a);
  const auto& nb = r.neighbours(b);
  std::size_t i = 0, j = 0;
  while (i < na.size() && j < nb.size()) {
    if (na[i] < nb[j]) ++i;
    else if (na[i] > nb[j]) ++j;
    else {
      if (na[i] != c) return true;
      ++i;
      ++j;
    }
  }
  return false;
}

}  // namespace

bool star_fails(const Graph& r, int c, const std::vector<int>& a_clique,
                const std::vector<int>& b_clique) {
  for (int a : a_clique)
    for (int b : b_clique)
      if (!have_common_neighbour_except(r, a, b, c)) return true;
  return false;
}

CandidateGraph candidate_single(const Graph& r, int c) {
  CandidateGraph cand;
  cand.source_vertex = c;
  auto cliques = neighbourhood_cliques(r, c);
  cand.graph = Graph(static_cast<int>(cliques.size()));
  for (const auto& q : cliques) cand.clique_sizes.push_back(static_cast<int>(q.size()));
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = i + 1; j < cliques.size(); ++j)
      if (star_fails(r, c, cliques[i], cliques[j]))
        cand.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
  return cand;
}

namespace {

Graph best_candidate(const Graph& r, CandidateGraph (*make)(const Graph&, int)) {
  if (r.n() == 0) throw Error(ErrorKind::EmptyInput, "reconfiguration graph has no vertices");
  Graph best;
  long long best_v = -1, best_e = -1;
  for (int c = 0; c < r.n(); ++c) {
    CandidateGraph cand = make(r, c);
    long long v = cand.graph.n(), e = cand.graph.edge_count();
    if (v > best_v || (v == best_v && e > best_e)) {
      best = std::move(cand.graph);
      best_v = v;
      best_e = e;
    }
  }
  return best;
}

}  // namespace

Graph reconstruct_single(const Graph& r) { return best_candidate(r, &candidate_single); }

Graph candidate_single_fast(const Graph& r, int c) { return candidate_single(r, c).graph; }

bool tstar_fails(const Graph& r, int c, int a, int b) {
  for (int x : common_neighbours(r, a, b)) {
    if (x == c) continue;
    if (!common_neighbours(r, a, x).empty() && !common_neighbours(r, b, x).empty())
      return false;  // double-triangle pattern realised
  }
  return true;
}

CandidateGraph candidate_kempe(const Graph& r, int c) {
  CandidateGraph cand;
  cand.source_vertex = c;
  auto cliques = neighbourhood_cliques(r, c);
  std::erase_if(cliques, [](const std::vector<int>& q) { return q.size() < 2; });
  cand.graph = Graph(static_cast<int>(cliques.size()));
  for (const auto& q : cliques) cand.clique_sizes.push_back(static_cast<int>(q.size()));
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = i + 1; j < cliques.size(); ++j) {
      bool edge = false;
      for (int a : cliques[i]) {
        for (int b : cliques[j])
          if (tstar_fails(r, c, a, b)) { edge = true; break; }
        if (edge) break;
      }
      if (edge) cand.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return cand;
}

Graph reconstruct_kempe(const Graph& r) { return best_candidate(r, &candidate_kempe); }

Graph candidate_kempe_fast(const Graph& r, int c) { return candidate_kempe(r, c).graph; }

Graph reconstruct_tar0(const Graph& r) {
  if (r.n() == 0) throw Error(ErrorKind::EmptyInput, "reconfiguration graph has no vertices");
  if (!is_connected(r)) throw Error(ErrorKind::NotConnected, "TAR threshold-0 graph must be connected");
  int full = 0;
  for (int v = 1; v < r.n(); ++v)
    if (r.degree(v) > r.degree(full)) full = v;
  const auto& nb = r.neighbours(full);
  Graph g(static_cast<int>(nb.size()));
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!have_common_neighbour_except(r, nb[i], nb[j], full))
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

namespace {

// Exhaustive layering search.  A candidate layer for v must differ by one
// from every assigned neighbour, and satisfy layer == 1 or layer <= deg(v)
// (a layer-L vertex needs L neighbours below).  Forced vertices (single
// candidate) are assigned first; otherwise branch on the lowest-index
// frontier vertex.  Prunes are sound, so every valid layering is found.
struct LayeringSearch {
  const Graph& g;
  std::vector<int> layer;                   // 0 = unassigned
  int assigned = 0;
  std::vector<std::vector<int>> solutions;  // complete assignments

  explicit LayeringSearch(const Graph& g_) : g(g_), layer(g_.n(), 0) {}

  std::vector<int> candidates(int v) const {
    int lo = 1, hi = g.n() + 1;
    bool any_nb = false;
    for (int u : g.neighbours(v)) {
      if (layer[u] == 0) continue;
      any_nb = true;
      lo = std::max(lo, layer[u] - 1);
      hi = std::min(hi, layer[u] + 1);
    }
    std::vector<int> out;
    if (!any_nb) return out;  // only used for frontier vertices
    for (int L = lo; L <= hi; ++L) {
      if (L < 1) continue;
      bool ok = (L == 1) || (L <= g.degree(v));
      for (int u : g.neighbours(v)) {
        if (!ok) break;
        if (layer[u] != 0 && std::abs(layer[u] - L) != 1) ok = false;
      }
      if (ok) out.push_back(L);
    }
    return out;
  }

  bool prunes_pass(int v) {
    const int L = layer[v];
    // Partial "exactly L below" counts for v and its assigned neighbours.
    auto check_counts = [&](int x) {
      int below = 0, unassigned = 0;
      for (int u : g.neighbours(x)) {
        if (layer[u] == 0) ++unassigned;
        else if (layer[u] == layer[x] - 1) ++below;
      }
      if (layer[x] >= 2) {
        if (below > layer[x]) return false;
        if (below + unassigned < layer[x]) return false;
        if (unassigned == 0 && below != layer[x]) return false;
      }
      return true;
    };
    if (!check_counts(v)) return false;
    for (int u : g.neighbours(v))
      if (layer[u] != 0 && !check_counts(u)) return false;
    // Partial shared-neighbour bound: same layer as v, common assigned
    // neighbours in an adjacent layer capped at one.
    for (int w = 0; w < g.n(); ++w) {
      if (w == v || layer[w] != L) continue;
      int shared_below = 0, shared_above = 0;
      for (int u : common_neighbours(g, v, w)) {
        if (layer[u] == L - 1) ++shared_below;
        if (layer[u] == L + 1) ++shared_above;
      }
      if (shared_below > 1 || shared_above > 1) return false;
    }
    return true;
  }

  bool complete_valid() const {
    int top = *std::max_element(layer.begin(), layer.end());
    std::vector<int> sizes(top + 1, 0);
    for (int L : layer) ++sizes[L];
    for (int L = 1; L <= top; ++L)
      if (sizes[L] == 0) return false;
    for (auto [u, v] : g.edges())
      if (std::abs(layer[u] - layer[v]) != 1) return false;
    for (int v = 0; v < g.n(); ++v) {
      if (layer[v] < 2) continue;
      int below = 0;
      for (int u : g.neighbours(v))
        if (layer[u] == layer[v] - 1) ++below;
      if (below != layer[v]) return false;
    }
    for (int v = 0; v < g.n(); ++v)
      for (int w = v + 1; w < g.n(); ++w) {
        if (layer[v] != layer[w]) continue;
        int shared_below = 0, shared_above = 0;
        for (int u : common_neighbours(g, v, w)) {
          if (layer[u] == layer[v] - 1) ++shared_below;
          if (layer[u] == layer[v] + 1) ++shared_above;
        }
        if (shared_below > 1 || shared_above > 1) return false;
      }
    return true;
  }

  void assign_and_go(int v, int L) {
    layer[v] = L;
    ++assigned;
    if (prunes_pass(v)) dfs();
    layer[v] = 0;
    --assigned;
  }

  void dfs() {
    if (assigned == g.n()) {
      if (complete_valid()) solutions.push_back(layer);
      return;
    }
    // Forced vertex first; otherwise branch on the lowest frontier vertex.
    int branch_v = -1;
    std::vector<int> branch_cands;
    for (int v = 0; v < g.n(); ++v) {
      if (layer[v] != 0) continue;
      bool frontier = false;
      for (int u : g.neighbours(v))
        if (layer[u] != 0) { frontier = true; break; }
      if (!frontier) continue;
      auto cands = candidates(v);
      if (cands.empty()) return;  // dead branch
      if (cands.size() == 1) {
        assign_and_go(v, cands[0]);
        return;
      }
      if (branch_v == -1) {
        branch_v = v;
        branch_cands = std::move(cands);
      }
    }
    if (branch_v == -1) return;  // disconnected remainder; caller passes components
    for (int L : branch_cands) assign_and_go(branch_v, L);
  }
};

}  // namespace

Layering find_layering(const Graph& component) {
  const int n = component.n();
  if (n == 0) throw Error(ErrorKind::NoLayering, "empty component");
  int root = 0;
  for (int v = 1; v < n; ++v)
    if (component.degree(v) < component.degree(root)) root = v;
  LayeringSearch search(component);
  for (int L = 1; L <= component.degree(root) + 1; ++L) {
    if (L >= 2 && L > component.degree(root)) continue;
    search.layer[root] = L;
    search.assigned = 1;
    if (search.prunes_pass(root)) search.dfs();
    search.layer[root] = 0;
    search.assigned = 0;
  }
  auto& sols = search.solutions;
  std::sort(sols.begin(), sols.end());
  sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
  if (sols.empty()) throw Error(ErrorKind::NoLayering, "component admits no layering");
  if (sols.size() > 1)
    throw Error(ErrorKind::AmbiguousLayering, "component admits multiple layerings");
  Layering out;
  int top = *std::max_element(sols[0].begin(), sols[0].end());
  out.layers.resize(top);
  for (int v = 0; v < n; ++v) out.layers[sols[0][v] - 1].push_back(v);
  return out;
}

namespace {

Graph tar1_factor(const Graph& comp, bool self_check, const Caps& caps) {
  const int n = comp.n();
  if (n == 1) return Graph(1);
  bool cycle = n >= 3;
  for (int v = 0; cycle && v < n; ++v)
    if (comp.degree(v) != 2) cycle = false;
  if (cycle && n % 2 == 0) {
    int i = n / 2;
    if (i < 4)
      throw Error(ErrorKind::InvalidComponent,
                  "cycle component shorter than 8 cannot arise from any graph");
    return complement(cycle_graph(i));
  }
  Layering lay = find_layering(comp);
  const auto& v1 = lay.layers[0];
  std::vector<char> in_v2(n, 0);
  if (lay.layers.size() > 1)
    for (int v : lay.layers[1]) in_v2[v] = 1;
  Graph factor(static_cast<int>(v1.size()));
  for (std::size_t i = 0; i < v1.size(); ++i)
    for (std::size_t j = i + 1; j < v1.size(); ++j) {
      bool shares = false;
      for (int u : common_neighbours(comp, v1[i], v1[j]))
        if (in_v2[u]) { shares = true; break; }
      if (!shares) factor.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  if (self_check) {
    ReconfigGraph rebuilt = build_token(factor, 1, Kind::TAR, caps);
    if (!is_isomorphic(rebuilt.graph, comp))
      throw Error(ErrorKind::InvalidComponent, "factor does not rebuild its component");
  }
  return factor;
}

}  // namespace

Graph reconstruct_tar1(const Graph& r, bool self_check, const Caps& caps) {
  if (r.n() == 0) return Graph(0);  // only the empty graph has no independent set
  Graph result(0);
  for (const Component& comp : connected_components(r))
    result = complete_join(result, tar1_factor(comp.graph, self_check, caps));
  return result;
}

Graph reconstruct_token_trivial(const Graph& r, Kind rule, int k, const Caps& caps) {
  if (rule == Kind::TS && k == 1) return r;
  if (rule == Kind::TAR && k == 0) return reconstruct_tar0(r);
  if (rule == Kind::TAR && k == 1) return reconstruct_tar1(r, false, caps);
  throw Error(ErrorKind::UnsupportedCase,
              "no reconstruction guarantee for this token rule and threshold");
}

Tj2Result reconstruct_tj2(const Graph& r, const Caps& caps) {
  if (r.n() == 0 || !is_connected(r))
    throw Error(ErrorKind::NotConnected, "token-jumping reconstruction needs a connected non-empty input");
  LineRoot root = line_graph_root(r, caps);
  switch (root.status) {
    case LineRoot::Status::NotLineGraph:
      throw Error(ErrorKind::NotLineGraph, "input is not a line graph");
    case LineRoot::Status::AmbiguousTriangle:
      return Tj2Result{std::nullopt,
                       {edgeless(3), complement(complete_bipartite(1, 3))}};
    case LineRoot::Status::Unique:
      return Tj2Result{complement(*root.root), {}};
  }
  throw Error(ErrorKind::UnsupportedCase, "unreachable");
}

}  // namespace reconf
