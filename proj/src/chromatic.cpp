#include "reconf/chromatic.hpp"

#include <algorithm>
#include <numeric>

namespace reconf {

namespace {

std::vector<int> by_descending_degree(const Graph& g) {
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  return order;
}

// Greedy clique over the descending-degree order; gives the lower bound and
// a seed assignment that breaks colour symmetry.
std::vector<int> greedy_clique(const Graph& g) {
  std::vector<int> clique;
  for (int v : by_descending_degree(g)) {
    bool ok = true;
    for (int u : clique)
      if (!g.has_edge(u, v)) { ok = false; break; }
    if (ok) clique.push_back(v);
  }
  return clique;
}

struct ColourSearch {
  const Graph& g;
  int k;
  long long& nodes;
  long long budget;
  std::vector<int> colour;  // 0 = unassigned

  ColourSearch(const Graph& g_, int k_, long long& nodes_, long long budget_)
      : g(g_), k(k_), nodes(nodes_), budget(budget_), colour(g_.n(), 0) {}

  bool feasible(int v, int c) const {
    for (int u : g.neighbours(v))
      if (colour[u] == c) return false;
    return true;
  }

  // Most-saturated uncoloured vertex; ties by degree then index.
  int pick() const {
    int best = -1, best_sat = -1;
    for (int v = 0; v < g.n(); ++v) {
      if (colour[v] != 0) continue;
      std::vector<char> seen(k + 1, 0);
      int sat = 0;
      for (int u : g.neighbours(v))
        if (colour[u] && !seen[colour[u]]) {
          seen[colour[u]] = 1;
          ++sat;
        }
      if (best == -1 || sat > best_sat ||
          (sat == best_sat && g.degree(v) > g.degree(best))) {
        best = v;
        best_sat = sat;
      }
    }
    return best;
  }

  bool solve(int assigned, int used) {
    if (assigned == g.n()) return true;
    if (++nodes > budget) throw Error(ErrorKind::ResourceCap, "colouring search budget exceeded");
    int v = pick();
    int limit = std::min(k, used + 1);  // new colours are interchangeable
    for (int c = 1; c <= limit; ++c) {
      if (!feasible(v, c)) continue;
      colour[v] = c;
      if (solve(assigned + 1, std::max(used, c))) return true;
      colour[v] = 0;
    }
    return false;
  }
};

bool colourable_impl(const Graph& g, int k, const std::vector<int>& clique, long long& nodes,
                     long long budget) {
  if (g.n() == 0) return true;
  if (k <= 0) return false;
  if (static_cast<int>(clique.size()) > k) return false;
  ColourSearch s(g, k, nodes, budget);
  int c = 0;
  for (int v : clique) s.colour[v] = ++c;
  return s.solve(static_cast<int>(clique.size()), c);
}

}  // namespace

bool colourable(const Graph& g, int k, const Caps& caps) {
  long long nodes = 0;
  return colourable_impl(g, k, greedy_clique(g), nodes, caps.search_nodes);
}

int chromatic_number(const Graph& g, const Caps& caps) {
  if (g.n() == 0) return 0;
  auto clique = greedy_clique(g);
  long long nodes = 0;  // budget shared across the deepening iterations
  for (int k = std::max<int>(1, static_cast<int>(clique.size()));; ++k)
    if (colourable_impl(g, k, clique, nodes, caps.search_nodes)) return k;
}

std::vector<std::vector<int>> independent_sets(const Graph& g, int min_size, const Caps& caps) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  long long count = 0;
  auto emit = [&]() {
    if (static_cast<int>(current.size()) < min_size) return;
    if (++count > caps.max_sets)
      throw Error(ErrorKind::ResourceCap, "independent set cap exceeded");
    out.push_back(current);
  };
  // Lexicographic: a set is emitted before its extensions.
  auto extend = [&](auto&& self, int from) -> void {
    emit();
    for (int v = from; v < g.n(); ++v) {
      bool ok = true;
      for (int u : current)
        if (g.has_edge(u, v)) { ok = false; break; }
      if (!ok) continue;
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

int independence_number(const Graph& g) {
  // Small-n branch and bound on the remaining vertex list.
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  int best = 0;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int from) -> void {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (static_cast<int>(chosen.size()) + (g.n() - from) <= best) return;
    for (int v = from; v < g.n(); ++v) {
      bool ok = true;
      for (int u : chosen)
        if (g.has_edge(u, v)) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(v);
      self(self, v + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace reconf
