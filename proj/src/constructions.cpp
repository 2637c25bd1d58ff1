#include "reconf/constructions.hpp"

#include <algorithm>
#include <map>

#include "reconf/chromatic.hpp"

namespace reconf {

Graph mycielskian(const Graph& g) {
  const int n = g.n();
  Graph m(2 * n + 1);
  const int w = 2 * n;
  for (auto [a, b] : g.edges()) {
    m.add_edge(a, b);
    m.add_edge(n + a, b);
    m.add_edge(a, n + b);
  }
  for (int i = 0; i < n; ++i) m.add_edge(n + i, w);
  return m;
}

Graph iterated_mycielskian(const Graph& g, int t) {
  if (t < 0)
    throw Error(ErrorKind::PreconditionViolated, "iteration count must be non-negative");
  Graph m = g;
  for (int i = 0; i < t; ++i) m = mycielskian(m);
  return m;
}

std::pair<Graph, Graph> frozen_twin(const Graph& g, int k, const Caps& caps) {
  std::vector<int> frozen = frozen_vertices(g, k, caps);
  if (frozen.empty())
    throw Error(ErrorKind::NoFrozenVertex, "no vertex keeps its colour in every colouring walk");
  const int v = frozen.front();
  Graph h(g.n() + 1);
  for (auto [a, b] : g.edges()) h.add_edge(a, b);
  for (int u : g.neighbours(v)) h.add_edge(u, g.n());
  return {g, h};
}

namespace {

void add_block(Graph& target, const Graph& block, int offset) {
  for (auto [a, b] : block.edges()) target.add_edge(offset + a, offset + b);
}

void add_join(Graph& target, int offset_a, int size_a, int offset_b, int size_b) {
  for (int i = 0; i < size_a; ++i)
    for (int j = 0; j < size_b; ++j) target.add_edge(offset_a + i, offset_b + j);
}

}  // namespace

FamilyMember join_chain_member(const FamilySpec& spec, const Caps& caps) {
  if (spec.chi < 6)
    throw Error(ErrorKind::PreconditionViolated, "target chromatic number must be at least 6");
  if (spec.p < 3 || spec.p > spec.chi - 3)
    throw Error(ErrorKind::PreconditionViolated,
                "split parameter must lie between 3 and chi - 3");
  if (chromatic_number(spec.h0, caps) >= spec.chi - spec.p)
    throw Error(ErrorKind::PreconditionViolated,
                "first end block must have chromatic number below chi - p");
  if (chromatic_number(spec.h3, caps) >= spec.p)
    throw Error(ErrorKind::PreconditionViolated,
                "second end block must have chromatic number below p");

  const Graph h1 = iterated_mycielskian(cycle_graph(5), spec.p - 3);
  const Graph h2 = iterated_mycielskian(cycle_graph(5), spec.chi - spec.p - 3);

  FamilyMember member;
  member.offset_h0 = 0;
  member.offset_h1 = spec.h0.n();
  member.offset_h2 = member.offset_h1 + h1.n();
  member.offset_h3 = member.offset_h2 + h2.n();
  const int total = member.offset_h3 + spec.h3.n();

  Graph g(total);
  add_block(g, spec.h0, member.offset_h0);
  add_block(g, h1, member.offset_h1);
  add_block(g, h2, member.offset_h2);
  add_block(g, spec.h3, member.offset_h3);
  add_join(g, member.offset_h0, spec.h0.n(), member.offset_h1, h1.n());
  add_join(g, member.offset_h1, h1.n(), member.offset_h2, h2.n());
  add_join(g, member.offset_h2, h2.n(), member.offset_h3, spec.h3.n());
  for (auto [i, j] : spec.extra_edges) {
    if (i < 0 || i >= spec.h0.n() || j < 0 || j >= spec.h3.n())
      throw Error(ErrorKind::PreconditionViolated, "extra edge endpoint out of range");
    g.add_edge(member.offset_h0 + i, member.offset_h3 + j);
  }
  member.graph = std::move(g);
  return member;
}

int spare_colour_core_size(int chi) {
  if (chi < 4)
    throw Error(ErrorKind::PreconditionViolated, "target chromatic number must be at least 4");
  int n = 5;
  for (int i = 4; i < chi; ++i) n = 2 * n + 1;
  return n;
}

Graph spare_colour_member(int chi, int extra, const Caps& caps) {
  if (chi < 4)
    throw Error(ErrorKind::PreconditionViolated, "target chromatic number must be at least 4");
  if (extra < 0)
    throw Error(ErrorKind::PreconditionViolated, "extra vertex count must be non-negative");
  (void)caps;
  const Graph core = iterated_mycielskian(cycle_graph(5), chi - 4);
  const int n = core.n();
  Graph g(2 * n + extra);
  add_block(g, core, 0);
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < n; ++j)
      if (j != a) g.add_edge(n + a, j);
  for (int t = 0; t < extra; ++t)
    for (int j = 0; j < n; ++j) g.add_edge(2 * n + t, j);
  return g;
}

Graph join_padding(const Graph& g, int k, const Graph& h) {
  if (k < 2)
    throw Error(ErrorKind::PreconditionViolated, "token count must be at least 2");
  if (independence_number(h) > k - 1)
    throw Error(ErrorKind::PreconditionViolated,
                "padding block admits an independent set of size k");
  return complete_join(g, h);
}

namespace {

bool colour_kind(Kind kind) { return kind == Kind::SingleVertex || kind == Kind::Kempe; }

ReconfigGraph build_for(const Graph& g, Kind kind, int k, const Caps& caps) {
  switch (kind) {
    case Kind::SingleVertex: return build_single(g, k, caps);
    case Kind::Kempe: return build_kempe(g, k, caps);
    default: return build_token(g, k, kind, caps);
  }
}

// Attempts to match every colouring of the larger graph to its restriction on
// the smaller graph's vertex set.  Returns a witness mapping small-side
// vertices to large-side vertices when the restriction is a bijection that
// preserves the move structure.
std::optional<IsoWitness> restriction_bijection(const ReconfigGraph& small,
                                                const ReconfigGraph& large, int small_n) {
  if (small.graph.n() != large.graph.n()) return std::nullopt;
  std::map<std::vector<int>, int> index_of_small;
  for (int i = 0; i < static_cast<int>(small.colour_labels.size()); ++i)
    index_of_small[small.colour_labels[i].assignment] = i;
  std::vector<int> large_to_small(large.graph.n(), -1);
  std::vector<char> hit(small.graph.n(), 0);
  for (int i = 0; i < static_cast<int>(large.colour_labels.size()); ++i) {
    std::vector<int> restricted(large.colour_labels[i].assignment.begin(),
                                large.colour_labels[i].assignment.begin() + small_n);
    auto it = index_of_small.find(restricted);
    if (it == index_of_small.end() || hit[it->second]) return std::nullopt;
    hit[it->second] = 1;
    large_to_small[i] = it->second;
  }
  IsoWitness witness;
  witness.mapping.assign(small.graph.n(), -1);
  for (int i = 0; i < large.graph.n(); ++i) witness.mapping[large_to_small[i]] = i;
  if (!witness.verify(small.graph, large.graph)) return std::nullopt;
  return witness;
}

}  // namespace

ReconfigComparison verify_same_reconfig(const Graph& g, const Graph& h, Kind kind, int k,
                                        const Caps& caps) {
  ReconfigGraph rg = build_for(g, kind, k, caps);
  ReconfigGraph rh = build_for(h, kind, k, caps);
  ReconfigComparison out;
  out.left_vertices = rg.graph.n();
  out.right_vertices = rh.graph.n();
  out.left_edges = rg.graph.edge_count();
  out.right_edges = rh.graph.edge_count();

  out.labels_equal = colour_kind(kind) ? rg.colour_labels == rh.colour_labels
                                       : rg.token_labels == rh.token_labels;
  if (out.labels_equal && rg.graph == rh.graph) {
    out.equal_labelled = true;
    out.isomorphic = true;
    out.method = "labelled-equality";
    IsoWitness identity;
    identity.mapping.resize(rg.graph.n());
    for (int i = 0; i < rg.graph.n(); ++i) identity.mapping[i] = i;
    out.witness = std::move(identity);
    return out;
  }

  if (colour_kind(kind) && g.n() != h.n()) {
    const bool g_small = g.n() < h.n();
    const ReconfigGraph& small = g_small ? rg : rh;
    const ReconfigGraph& large = g_small ? rh : rg;
    auto witness = restriction_bijection(small, large, g_small ? g.n() : h.n());
    if (witness) {
      out.isomorphic = true;
      out.method = "restriction-bijection";
      if (g_small) {
        out.witness = std::move(witness);
      } else {
        IsoWitness inverted;
        inverted.mapping.assign(witness->mapping.size(), -1);
        for (int i = 0; i < static_cast<int>(witness->mapping.size()); ++i)
          inverted.mapping[witness->mapping[i]] = i;
        out.witness = std::move(inverted);
      }
      return out;
    }
  }

  out.method = "isomorphism-search";
  out.witness = is_isomorphic(rg.graph, rh.graph);
  out.isomorphic = out.witness.has_value();
  return out;
}

}  // namespace reconf
