#include "reconf/reconfig.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <unordered_map>

#include "reconf/chromatic.hpp"

namespace reconf {

const char* kind_name(Kind kind) {
  switch (kind) {
    case Kind::SingleVertex: return "single";
    case Kind::Kempe: return "kempe";
    case Kind::TJ: return "tj";
    case Kind::TS: return "ts";
    case Kind::TAR: return "tar";
  }
  return "unknown";
}

Kind kind_from_name(const std::string& name) {
  if (name == "single") return Kind::SingleVertex;
  if (name == "kempe") return Kind::Kempe;
  if (name == "tj") return Kind::TJ;
  if (name == "ts") return Kind::TS;
  if (name == "tar") return Kind::TAR;
  throw Error(ErrorKind::ParseError, "unknown reconfiguration kind: " + name);
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (int x : v) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

using Index = std::unordered_map<std::vector<int>, int, VecHash>;

Index make_index(const std::vector<Colouring>& cols) {
  Index idx;
  idx.reserve(cols.size() * 2);
  for (int i = 0; i < static_cast<int>(cols.size()); ++i) idx.emplace(cols[i].assignment, i);
  return idx;
}

}  // namespace

ReconfigGraph build_single(const Graph& g, int k, const Caps& caps) {
  ReconfigGraph r;
  r.kind = Kind::SingleVertex;
  r.k = k;
  r.colour_labels = enumerate_colourings(g, k, caps);
  r.graph = Graph(static_cast<int>(r.colour_labels.size()));
  Index idx = make_index(r.colour_labels);
  for (int i = 0; i < r.graph.n(); ++i)
    for (const VertexMove& mv : single_vertex_moves(g, r.colour_labels[i])) {
      int j = idx.at(mv.result.assignment);
      if (j > i) r.graph.add_edge(i, j);
    }
  return r;
}

ReconfigGraph build_kempe(const Graph& g, int k, const Caps& caps) {
  ReconfigGraph r;
  r.kind = Kind::Kempe;
  r.k = k;
  r.colour_labels = enumerate_colourings(g, k, caps);
  r.graph = Graph(static_cast<int>(r.colour_labels.size()));
  Index idx = make_index(r.colour_labels);
  for (int i = 0; i < r.graph.n(); ++i)
    for (const Colouring& c : kempe_moves(g, r.colour_labels[i])) {
      int j = idx.at(c.assignment);
      if (j > i) r.graph.add_edge(i, j);
    }
  return r;
}

ReconfigGraph build_token(const Graph& g, int k, Kind rule, const Caps& caps) {
  if (rule != Kind::TJ && rule != Kind::TS && rule != Kind::TAR)
    throw Error(ErrorKind::UnsupportedCase, "token rule must be tj, ts or tar");
  if (k < 0) throw Error(ErrorKind::PreconditionViolated, "token count must be non-negative");
  ReconfigGraph r;
  r.kind = rule;
  r.k = k;
  auto sets = independent_sets(g, k, caps);
  if (rule != Kind::TAR) {
    std::erase_if(sets, [&](const TokenSet& s) { return static_cast<int>(s.size()) != k; });
  }
  r.token_labels = std::move(sets);
  const auto& labels = r.token_labels;
  r.graph = Graph(static_cast<int>(labels.size()));
  std::vector<int> diff;
  for (int i = 0; i < r.graph.n(); ++i)
    for (int j = i + 1; j < r.graph.n(); ++j) {
      diff.clear();
      std::set_symmetric_difference(labels[i].begin(), labels[i].end(), labels[j].begin(),
                                    labels[j].end(), std::back_inserter(diff));
      bool edge = false;
      switch (rule) {
        case Kind::TAR:
          edge = diff.size() == 1;
          break;
        case Kind::TJ:
          edge = diff.size() == 2 && labels[i].size() == labels[j].size();
          break;
        case Kind::TS:
          edge = diff.size() == 2 && labels[i].size() == labels[j].size() &&
                 g.has_edge(diff[0], diff[1]);
          break;
        default:
          break;
      }
      if (edge) r.graph.add_edge(i, j);
    }
  return r;
}

Graph strip(const ReconfigGraph& r, unsigned long long seed) {
  const int n = r.graph.n();
  std::mt19937_64 rng(seed);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % static_cast<unsigned long long>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return permuted(r.graph, perm);
}

}  // namespace reconf
