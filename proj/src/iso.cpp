#include "reconf/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace reconf {

bool IsoWitness::verify(const Graph& g, const Graph& h) const {
  if (g.n() != h.n() || static_cast<int>(mapping.size()) != g.n()) return false;
  std::vector<char> hit(g.n(), 0);
  for (int v : mapping) {
    if (v < 0 || v >= g.n() || hit[v]) return false;
    hit[v] = 1;
  }
  if (g.edge_count() != h.edge_count()) return false;
  for (auto [u, v] : g.edges())
    if (!h.has_edge(mapping[u], mapping[v])) return false;
  return true;
}

namespace {

// One refinement round: new colour id from (old colour, sorted neighbour
// colours).  Ids are allocated from a table shared by both graphs so they
// stay comparable.
void refine_round(const Graph& g, const Graph& h, std::vector<int>& cg, std::vector<int>& ch) {
  using Sig = std::pair<int, std::vector<int>>;
  std::map<Sig, int> ids;
  auto signature = [](const Graph& gr, const std::vector<int>& col, int v) {
    std::vector<int> nb;
    nb.reserve(gr.degree(v));
    for (int w : gr.neighbours(v)) nb.push_back(col[w]);
    std::sort(nb.begin(), nb.end());
    return Sig{col[v], std::move(nb)};
  };
  std::vector<Sig> sg(g.n()), sh(h.n());
  for (int v = 0; v < g.n(); ++v) sg[v] = signature(g, cg, v);
  for (int v = 0; v < h.n(); ++v) sh[v] = signature(h, ch, v);
  for (const auto& s : sg) ids.emplace(s, 0);
  for (const auto& s : sh) ids.emplace(s, 0);
  int next = 0;
  for (auto& [sig, id] : ids) id = next++;
  for (int v = 0; v < g.n(); ++v) cg[v] = ids[sg[v]];
  for (int v = 0; v < h.n(); ++v) ch[v] = ids[sh[v]];
}

bool histograms_match(const std::vector<int>& cg, const std::vector<int>& ch) {
  std::vector<int> a = cg, b = ch;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

struct Backtracker {
  const Graph& g;
  const Graph& h;
  const std::vector<int>& cg;
  const std::vector<int>& ch;
  std::vector<int> order;      // g vertices, in assignment order
  std::vector<int> map_gh;     // g -> h, -1 unset
  std::vector<char> used_h;

  Backtracker(const Graph& g_, const Graph& h_, const std::vector<int>& cg_,
              const std::vector<int>& ch_)
      : g(g_), h(h_), cg(cg_), ch(ch_), map_gh(g_.n(), -1), used_h(h_.n(), 0) {
    // Assignment order: keep the frontier connected when possible, prefer
    // vertices from small refinement classes.
    std::vector<int> class_size(g.n() + h.n() + 1, 0);
    for (int c : cg) ++class_size[c];
    std::vector<char> placed(g.n(), 0);
    std::vector<int> mapped_nbrs(g.n(), 0);
    for (int step = 0; step < g.n(); ++step) {
      int best = -1;
      for (int v = 0; v < g.n(); ++v) {
        if (placed[v]) continue;
        if (best == -1) { best = v; continue; }
        auto key = [&](int x) {
          return std::tuple<int, int, int>(-mapped_nbrs[x], class_size[cg[x]], x);
        };
        if (key(v) < key(best)) best = v;
      }
      placed[best] = 1;
      order.push_back(best);
      for (int w : g.neighbours(best))
        if (!placed[w]) ++mapped_nbrs[w];
    }
  }

  bool search(std::size_t pos) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int w = 0; w < h.n(); ++w) {
      if (used_h[w] || ch[w] != cg[v] || h.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (int u : g.neighbours(v)) {
        if (map_gh[u] == -1) continue;
        if (!h.has_edge(w, map_gh[u])) { ok = false; break; }
      }
      if (ok) {
        // mapped non-neighbours must stay non-adjacent; counting suffices:
        // w's mapped neighbours must all come from v's neighbours.
        int v_mapped = 0;
        for (int u : g.neighbours(v))
          if (map_gh[u] != -1) ++v_mapped;
        int w_mapped = 0;
        for (int u : h.neighbours(w))
          if (used_h[u]) ++w_mapped;
        if (v_mapped != w_mapped) ok = false;
      }
      if (!ok) continue;
      map_gh[v] = w;
      used_h[w] = 1;
      if (search(pos + 1)) return true;
      map_gh[v] = -1;
      used_h[w] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<IsoWitness> is_isomorphic(const Graph& g, const Graph& h) {
  if (g.n() != h.n() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (g.n() == 0) return IsoWitness{{}};

  std::vector<int> cg(g.n()), ch(h.n());
  for (int v = 0; v < g.n(); ++v) cg[v] = g.degree(v);
  for (int v = 0; v < h.n(); ++v) ch[v] = h.degree(v);
  if (!histograms_match(cg, ch)) return std::nullopt;

  int classes = 0;
  for (int round = 0; round < g.n(); ++round) {
    refine_round(g, h, cg, ch);
    if (!histograms_match(cg, ch)) return std::nullopt;
    int now = 1 + *std::max_element(cg.begin(), cg.end());
    if (now == classes) break;
    classes = now;
  }

  Backtracker bt(g, h, cg, ch);
  if (!bt.search(0)) return std::nullopt;
  return IsoWitness{bt.map_gh};
}

}  // namespace reconf
