#include "reconf/colouring.hpp"

#include <algorithm>

#include "reconf/chromatic.hpp"

namespace reconf {

bool Colouring::proper_on(const Graph& g) const {
  if (static_cast<int>(assignment.size()) != g.n()) return false;
  for (int c : assignment)
    if (c < 1 || c > k) return false;
  for (auto [u, v] : g.edges())
    if (assignment[u] == assignment[v]) return false;
  return true;
}

namespace {

void require_proper(const Graph& g, const Colouring& c) {
  if (!c.proper_on(g))
    throw Error(ErrorKind::ImproperInput, "colouring is not a proper colouring of the graph");
}

}  // namespace

void for_each_colouring(const Graph& g, int k, const Caps& caps,
                        const std::function<bool(const std::vector<int>&)>& fn) {
  if (k < 0) throw Error(ErrorKind::PreconditionViolated, "colour count must be non-negative");
  const int n = g.n();
  std::vector<int> a(n, 0);
  long long count = 0;
  bool stop = false;
  auto rec = [&](auto&& self, int v) -> void {
    if (stop) return;
    if (v == n) {
      if (++count > caps.max_colourings)
        throw Error(ErrorKind::ResourceCap, "colouring enumeration cap exceeded");
      if (!fn(a)) stop = true;
      return;
    }
    for (int c = 1; c <= k && !stop; ++c) {
      bool ok = true;
      for (int u : g.neighbours(v))
        if (u < v && a[u] == c) { ok = false; break; }
      if (!ok) continue;
      a[v] = c;
      self(self, v + 1);
      a[v] = 0;
    }
  };
  rec(rec, 0);
}

std::vector<Colouring> enumerate_colourings(const Graph& g, int k, const Caps& caps) {
  std::vector<Colouring> out;
  for_each_colouring(g, k, caps, [&](const std::vector<int>& a) {
    out.push_back(Colouring{a, k});
    return true;
  });
  return out;
}

std::vector<VertexMove> single_vertex_moves(const Graph& g, const Colouring& c) {
  require_proper(g, c);
  std::vector<VertexMove> out;
  for (int v = 0; v < g.n(); ++v) {
    for (int j = 1; j <= c.k; ++j) {
      if (j == c.assignment[v]) continue;
      bool ok = true;
      for (int u : g.neighbours(v))
        if (c.assignment[u] == j) { ok = false; break; }
      if (!ok) continue;
      Colouring r = c;
      r.assignment[v] = j;
      out.push_back({v, j, std::move(r)});
    }
  }
  return out;
}

Colouring kempe_swap(const Graph& g, const Colouring& c, int v, int j) {
  require_proper(g, c);
  if (v < 0 || v >= g.n()) throw Error(ErrorKind::ImproperInput, "swap vertex out of range");
  if (j < 1 || j > c.k) throw Error(ErrorKind::ImproperInput, "swap colour out of range");
  const int i = c.assignment[v];
  if (i == j) return c;
  // BFS over the {i, j}-coloured component of v.
  std::vector<char> in_comp(g.n(), 0);
  std::vector<int> stack{v};
  in_comp[v] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int u : g.neighbours(x)) {
      if (in_comp[u]) continue;
      if (c.assignment[u] != i && c.assignment[u] != j) continue;
      in_comp[u] = 1;
      stack.push_back(u);
    }
  }
  Colouring r = c;
  for (int x = 0; x < g.n(); ++x)
    if (in_comp[x]) r.assignment[x] = (c.assignment[x] == i) ? j : i;
  return r;
}

std::vector<Colouring> kempe_moves(const Graph& g, const Colouring& c) {
  require_proper(g, c);
  std::vector<Colouring> out;
  for (int v = 0; v < g.n(); ++v)
    for (int j = 1; j <= c.k; ++j) {
      if (j == c.assignment[v]) continue;
      Colouring r = kempe_swap(g, c, v, j);
      if (!(r == c)) out.push_back(std::move(r));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> frozen_vertices(const Graph& g, int k, const Caps& caps) {
  const int n = g.n();
  std::vector<char> frozen(n, 1);
  int remaining = n;
  bool any = false;
  std::vector<int> stamp(k + 2, -1);
  int tick = 0;
  for_each_colouring(g, k, caps, [&](const std::vector<int>& a) {
    any = true;
    for (int v = 0; v < n; ++v) {
      if (!frozen[v]) continue;
      ++tick;
      int distinct = 0;
      stamp[a[v]] = tick;
      ++distinct;
      for (int u : g.neighbours(v))
        if (stamp[a[u]] != tick) {
          stamp[a[u]] = tick;
          ++distinct;
        }
      if (distinct < k) {
        frozen[v] = 0;
        if (--remaining == 0) return false;
      }
    }
    return true;
  });
  if (!any) throw Error(ErrorKind::NoColourings, "graph has no proper colouring with this many colours");
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (frozen[v]) out.push_back(v);
  return out;
}

std::vector<std::pair<int, int>> always_distinct_pairs(const Graph& g, int k, const Caps& caps) {
  const int n = g.n();
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) pairs.emplace_back(u, v);
  std::vector<char> alive(pairs.size(), 1);
  std::size_t remaining = pairs.size();
  bool any = false;
  for_each_colouring(g, k, caps, [&](const std::vector<int>& a) {
    any = true;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!alive[i]) continue;
      if (a[pairs[i].first] == a[pairs[i].second]) {
        alive[i] = 0;
        if (--remaining == 0) return false;
      }
    }
    return true;
  });
  if (!any) throw Error(ErrorKind::NoColourings, "graph has no proper colouring with this many colours");
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (alive[i]) out.push_back(pairs[i]);
  return out;
}

bool unique_colour_property(const Graph& g, const Caps& caps) {
  const int n = g.n();
  if (n == 0) return true;
  const int chi = chromatic_number(g, caps);
  std::vector<char> witnessed(n, 0);
  int remaining = n;
  std::vector<int> count(chi + 1, 0);
  for_each_colouring(g, chi, caps, [&](const std::vector<int>& a) {
    std::fill(count.begin(), count.end(), 0);
    for (int c : a) ++count[c];
    for (int v = 0; v < n; ++v)
      if (!witnessed[v] && count[a[v]] == 1) {
        witnessed[v] = 1;
        if (--remaining == 0) return false;
      }
    return true;
  });
  return remaining == 0;
}

}  // namespace reconf
