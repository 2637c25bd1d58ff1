#include "reconf/catalog.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

namespace reconf {

namespace {

// Edge bit layout for a fixed n: pair (i, j) with i < j, listed in
// lexicographic order.
struct PairIndex {
  int n;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> index;

  explicit PairIndex(int n_) : n(n_), index(n_, std::vector<int>(n_, -1)) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        index[i][j] = index[j][i] = static_cast<int>(pairs.size());
        pairs.emplace_back(i, j);
      }
  }
};

std::uint32_t apply_perm(std::uint32_t mask, const std::vector<int>& perm,
                         const PairIndex& pi) {
  std::uint32_t out = 0;
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    const int e = std::countr_zero(rest);
    const auto [u, v] = pi.pairs[e];
    out |= std::uint32_t{1} << pi.index[perm[u]][perm[v]];
  }
  return out;
}

std::uint32_t canonical_mask(std::uint32_t mask, const PairIndex& pi) {
  std::vector<int> perm(pi.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = mask;
  while (std::next_permutation(perm.begin(), perm.end()))
    best = std::min(best, apply_perm(mask, perm, pi));
  return best;
}

}  // namespace

std::vector<Graph> graph_catalog(int n_max) {
  if (n_max < 0) return {};
  if (n_max > 6)
    throw Error(ErrorKind::ResourceCap, "catalog enumerates at most 6 vertices per class");
  std::vector<Graph> out;
  for (int n = 0; n <= n_max; ++n) {
    const PairIndex pi(n);
    const std::uint32_t masks = std::uint32_t{1} << pi.pairs.size();
    std::set<std::uint32_t> classes;
    for (std::uint32_t mask = 0; mask < masks; ++mask)
      classes.insert(canonical_mask(mask, pi));
    for (std::uint32_t mask : classes) {
      Graph g(n);
      for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        const auto [u, v] = pi.pairs[std::countr_zero(rest)];
        g.add_edge(u, v);
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace reconf
