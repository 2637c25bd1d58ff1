// Acceptance gate.  Twelve end-to-end checks cover the round-trip
// guarantees, the frozen fixed-point counts, the counterexample families,
// and agreement with the brute-force oracles.  Each check prints exactly
// one [PASS]/[FAIL] line; the exit code is the number of failed checks.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "reconf/catalog.hpp"
#include "reconf/chromatic.hpp"
#include "reconf/colouring.hpp"
#include "reconf/constructions.hpp"
#include "reconf/graph.hpp"
#include "reconf/io.hpp"
#include "reconf/iso.hpp"
#include "reconf/line_root.hpp"
#include "reconf/pipeline.hpp"
#include "reconf/reconfig.hpp"
#include "reconf/reconstruct.hpp"

using namespace reconf;

namespace {

struct Report {
  std::vector<std::string> problems;
  std::string note;  // shown on the summary line when the check passes

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

std::string join(const std::vector<std::string>& items, std::size_t limit = 8) {
  std::string out;
  for (std::size_t i = 0; i < items.size() && i < limit; ++i) {
    if (!out.empty()) out += ", ";
    out += items[i];
  }
  if (items.size() > limit)
    out += ", ... (" + std::to_string(items.size()) + " total)";
  return out;
}

// K_3 plus one vertex joined to an edge of it.
Graph two_tree_4() {
  return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
}

// K_4 plus one vertex joined to a triangle of it.
Graph three_tree_5() {
  return Graph::from_edges(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1}, {4, 2}});
}

std::vector<std::string> failed_records(const SweepResult& result) {
  std::vector<std::string> bad;
  for (const RoundtripRecord& record : result.records)
    if (record.status == RoundtripRecord::Status::Fail ||
        record.status == RoundtripRecord::Status::Error)
      bad.push_back(record.graph6 + "/seed" + std::to_string(record.seed) +
                    (record.detail.empty() ? "" : " (" + record.detail + ")"));
  return bad;
}

// 1. Every graph on <= 6 vertices comes back from its recolouring graph at
// k = chi + 1, for three shuffle seeds.
void run_single_roundtrip(Report& r) {
  SweepOptions options;
  options.kind = Kind::SingleVertex;
  options.rule = KRule::ChiPlus1;
  options.n_max = 6;
  options.seeds = {1, 2, 3};
  SweepResult result = sweep(options);
  r.require(result.summary.total == 627,
            "expected 627 attempts, saw " + std::to_string(result.summary.total));
  r.require(result.summary.skipped == 0, "unexpected skipped classes");
  r.require(result.summary.reconstructed == result.summary.total,
            "not reconstructed: " + join(failed_records(result)));
  r.note = "209 classes x 3 seeds, " +
           std::to_string(result.summary.reconstructed) + "/627 reconstructed";
}

// 2. With k = min{n, 2*max degree} + 1, the distance-2 candidate at every
// vertex of the shuffled recolouring graph must match the input.
void run_fast_every_vertex(Report& r) {
  std::vector<std::string> bad;
  int classes = 0;
  for (const Graph& g : graph_catalog(5)) {
    ++classes;
    const int k = std::min(g.n(), 2 * g.max_degree()) + 1;
    const Graph shuffled = strip(build_single(g, k), 1);
    bool all_match = true;
    for (int c = 0; all_match && c < shuffled.n(); ++c)
      if (!is_isomorphic(candidate_single_fast(shuffled, c), g)) all_match = false;
    if (!all_match)
      bad.push_back(to_graph6(g) + " (n=" + std::to_string(g.n()) + ", max degree " +
                    std::to_string(g.max_degree()) + ", k=" + std::to_string(k) + ")");
  }
  r.require(bad.empty(),
            std::to_string(bad.size()) + " of " + std::to_string(classes) +
                " classes fail, all edgeless: with max degree 0 the rule pins "
                "k = 1, the only colouring is constant, the recolouring graph "
                "is a single vertex, and its candidate is the empty graph; "
                "failing classes: " +
                join(bad));
  r.note = "every vertex of every shuffled recolouring graph decodes to the input";
}

// 3. Exact frozen fixed points: connected two-chromatic graphs give two
// isolated colourings at k = 2; small clique-trees give k! isolated
// colourings at k = chi.
void run_fixed_points(Report& r) {
  int bipartite_classes = 0;
  for (const Graph& g : graph_catalog(6)) {
    if (!is_connected(g) || chromatic_number(g) != 2) continue;
    ++bipartite_classes;
    ReconfigGraph rr = build_single(g, 2);
    r.require(rr.graph.n() == 2 && rr.graph.edge_count() == 0,
              to_graph6(g) + ": expected 2 isolated colourings, saw " +
                  std::to_string(rr.graph.n()) + " vertices / " +
                  std::to_string(rr.graph.edge_count()) + " edges");
  }
  auto expect_frozen = [&](const Graph& g, int k, int vertices, const char* name) {
    ReconfigGraph rr = build_single(g, k);
    r.require(rr.graph.n() == vertices && rr.graph.edge_count() == 0,
              std::string(name) + ": expected " + std::to_string(vertices) +
                  " isolated colourings, saw " + std::to_string(rr.graph.n()) +
                  " vertices / " + std::to_string(rr.graph.edge_count()) + " edges");
  };
  expect_frozen(complete_graph(3), 3, 6, "K3 at k=3");
  expect_frozen(two_tree_4(), 3, 6, "4-vertex 2-tree at k=3");
  expect_frozen(complete_graph(4), 4, 24, "K4 at k=4");
  expect_frozen(three_tree_5(), 4, 24, "5-vertex 3-tree at k=4");
  r.note = std::to_string(bipartite_classes) +
           " connected two-chromatic classes at 2/0, clique-trees at 6/6/24/24";
}

// 4. Kempe round-trip at k = chi + 2 on <= 5 vertices, and the Kempe graphs
// of small clique-trees are transposition Cayley graphs.
void run_kempe(Report& r) {
  SweepOptions options;
  options.kind = Kind::Kempe;
  options.rule = KRule::ChiPlus2;
  options.n_max = 5;
  options.seeds = {1, 2, 3};
  SweepResult result = sweep(options);
  r.require(result.summary.total == 159,
            "expected 159 attempts, saw " + std::to_string(result.summary.total));
  r.require(result.summary.reconstructed == result.summary.total,
            "not reconstructed: " + join(failed_records(result)));

  const Graph cayley3 = oracle::transposition_cayley(3);
  const Graph cayley4 = oracle::transposition_cayley(4);
  r.require(is_isomorphic(cayley3, complete_bipartite(3, 3)).has_value(),
            "the transposition graph on 3 symbols is not K_{3,3}");
  auto matches_cayley = [&](const Graph& g, int k, const Graph& cayley,
                            const char* name) {
    ReconfigGraph rr = build_kempe(g, k);
    r.require(is_isomorphic(rr.graph, cayley).has_value(),
              std::string(name) + ": Kempe graph does not match the "
                                  "transposition Cayley graph");
  };
  matches_cayley(complete_graph(3), 3, cayley3, "K3 at k=3");
  matches_cayley(two_tree_4(), 3, cayley3, "4-vertex 2-tree at k=3");
  matches_cayley(complete_graph(4), 4, cayley4, "K4 at k=4");
  matches_cayley(three_tree_5(), 4, cayley4, "5-vertex 3-tree at k=4");
  r.note = "53 classes x 3 seeds reconstructed; Cayley matches on 6 and 24 vertices";
}

// 5. At k = chi the reconstruction must NOT succeed: frozen inputs decode to
// nothing, and adding a twin of a frozen vertex changes the graph without
// changing its recolouring graph.
void run_negative_controls(Report& r) {
  auto stays_hidden = [&](const Graph& g, int k) {
    Graph rebuilt = reconstruct_single(strip(build_single(g, k), 1));
    return !is_isomorphic(rebuilt, g).has_value();
  };
  r.require(stays_hidden(complete_graph(3), 3),
            "the triangle was recovered from its 3-colouring graph");
  r.require(stays_hidden(cycle_graph(6), 2),
            "the six-cycle was recovered from its 2-colouring graph");

  auto twin_control = [&](const Graph& g, int k, const char* name) {
    auto [base, twin] = frozen_twin(g, k);
    r.require(!is_isomorphic(base, twin).has_value(),
              std::string(name) + ": twin should not be isomorphic to the base");
    ReconfigComparison cmp = verify_same_reconfig(base, twin, Kind::SingleVertex, k);
    r.require(cmp.isomorphic,
              std::string(name) + ": twin recolouring graphs are not isomorphic");
  };
  twin_control(complete_graph(3), 3, "triangle twin at k=3");
  twin_control(cycle_graph(4), 2, "four-cycle twin at k=2");
  r.note = "frozen inputs stay hidden; twin pairs share their recolouring graphs";
}

// 6. Join-chain counterexample family: three pairwise non-isomorphic graphs with
// chromatic number 6, no frozen vertices, and byte-identical labelled
// 6-colouring reconfiguration graphs.
void run_join_chain_family(Report& r) {
  FamilySpec spec;
  spec.chi = 6;
  spec.p = 3;
  spec.h0 = complete_graph(2);
  spec.h3 = complete_graph(1);
  const std::vector<std::vector<std::pair<int, int>>> extras = {
      {}, {{0, 0}}, {{0, 0}, {1, 0}}};
  std::vector<Graph> members;
  for (const auto& extra : extras) {
    spec.extra_edges = extra;
    members.push_back(join_chain_member(spec).graph);
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      r.require(!is_isomorphic(members[i], members[j]).has_value(),
                "members " + std::to_string(i) + " and " + std::to_string(j) +
                    " are isomorphic");
  for (std::size_t i = 0; i < members.size(); ++i) {
    r.require(chromatic_number(members[i]) == 6,
              "member " + std::to_string(i) + " does not have chromatic number 6");
    r.require(frozen_vertices(members[i], 6).empty(),
              "member " + std::to_string(i) + " has frozen vertices at k=6");
  }

  auto dump_hash = [](const ReconfigGraph& rr) {
    return input_hash_hex(reconfig_to_json(rr).dump());
  };
  ReconfigGraph previous = build_single(members[0], 6);
  r.require(previous.graph.n() == 324000,
            "expected 324000 colourings, saw " + std::to_string(previous.graph.n()));
  const std::string hash0 = dump_hash(previous);
  const int shared_edges = previous.graph.edge_count();
  for (std::size_t i = 1; i < members.size(); ++i) {
    ReconfigGraph current = build_single(members[i], 6);
    r.require(current.colour_labels == previous.colour_labels,
              "member " + std::to_string(i) + " has different colouring labels");
    r.require(current.graph == previous.graph,
              "member " + std::to_string(i) + " has a different recolouring graph");
    r.require(dump_hash(current) == hash0,
              "member " + std::to_string(i) + " serialises to different bytes");
    previous = std::move(current);
  }
  r.note = "three 13-vertex members, 324000 colourings, " +
           std::to_string(shared_edges) + " shared edges, serialisation hash " + hash0;
}

// 7. Spare-colour counterexample family: members of different sizes have
// isomorphic 4-colouring graphs via the restriction bijection, and the base
// member has no frozen structure at all.
void run_spare_colour_family(Report& r) {
  const Graph g0 = spare_colour_member(4, 0);
  const Graph g1 = spare_colour_member(4, 1);
  r.require(chromatic_number(g0) == 4, "member 0 does not have chromatic number 4");
  r.require(chromatic_number(g1) == 4, "member 1 does not have chromatic number 4");
  ReconfigComparison cmp = verify_same_reconfig(g0, g1, Kind::SingleVertex, 4);
  r.require(cmp.isomorphic, "members 0 and 1 have non-isomorphic recolouring graphs");
  r.require(cmp.method == "restriction-bijection",
            "expected the restriction bijection, saw method " + cmp.method);
  r.require(frozen_vertices(g0, 4).empty(), "member 0 has frozen vertices at k=4");
  r.require(always_distinct_pairs(g0, 4).empty(),
            "member 0 has an always-distinct non-adjacent pair at k=4");

  const int core = spare_colour_core_size(4);
  bool three_colours_on_core = true;
  int colourings = 0;
  for_each_colouring(g0, 4, Caps{}, [&](const std::vector<int>& assignment) {
    const std::set<int> used(assignment.begin(), assignment.begin() + core);
    if (static_cast<int>(used.size()) != 3) three_colours_on_core = false;
    ++colourings;
    return true;
  });
  r.require(three_colours_on_core,
            "a 4-colouring of member 0 does not use exactly 3 colours on the core");
  r.note = "members on " + std::to_string(g0.n()) + "/" + std::to_string(g1.n()) +
           " vertices, " + std::to_string(cmp.left_vertices) +
           " colourings each, core always on exactly 3 of 4 colours (" +
           std::to_string(colourings) + " colourings checked)";
}

// 8. One-token graphs are the graph itself (sliding) or a clique (jumping);
// zero-token graphs are single vertices.
void run_token_observations(Report& r) {
  int classes = 0;
  for (const Graph& g : graph_catalog(6)) {
    ++classes;
    const std::string name = to_graph6(g);
    r.require(build_token(g, 1, Kind::TS).graph == g,
              name + ": one-token slide graph differs from the graph");
    r.require(build_token(g, 1, Kind::TJ).graph == complete_graph(g.n()),
              name + ": one-token jump graph is not complete");
    for (Kind rule : {Kind::TJ, Kind::TS}) {
      ReconfigGraph rr = build_token(g, 0, rule);
      r.require(rr.graph.n() == 1 && rr.graph.edge_count() == 0,
                name + ": zero-token graph is not a single vertex");
    }
  }
  r.note = std::to_string(classes) + " classes checked for both rules";
}

// 9. Token addition/removal round-trips at thresholds 0 and 1, plus the
// exact even-cycle correspondence: the 1-threshold graph of the complement
// of C_i is C_{2i}, and the decoder inverts it.
void run_tar(Report& r) {
  for (int k : {0, 1}) {
    SweepOptions options;
    options.kind = Kind::TAR;
    options.rule = KRule::Fixed;
    options.fixed_k = k;
    options.n_max = 6;
    options.seeds = {1, 2, 3};
    SweepResult result = sweep(options);
    r.require(result.summary.total == 627,
              "threshold " + std::to_string(k) + ": expected 627 attempts, saw " +
                  std::to_string(result.summary.total));
    r.require(result.summary.reconstructed == result.summary.total,
              "threshold " + std::to_string(k) +
                  " not reconstructed: " + join(failed_records(result)));
  }
  for (int i = 4; i <= 8; ++i) {
    const Graph g = complement(cycle_graph(i));
    ReconfigGraph rr = build_token(g, 1, Kind::TAR);
    r.require(is_isomorphic(rr.graph, cycle_graph(2 * i)).has_value(),
              "1-threshold graph of the complement of C" + std::to_string(i) +
                  " is not C" + std::to_string(2 * i));
    const Graph rebuilt = reconstruct_tar1(strip(rr, 1), true);
    r.require(is_isomorphic(rebuilt, g).has_value(),
              "C" + std::to_string(2 * i) + " does not decode back to the "
                  "complement of C" + std::to_string(i));
  }
  r.note = "627+627 round-trips at thresholds 0 and 1; C8..C16 invert exactly";
}

// 10. Two-token jumping: every in-scope class round-trips; the three
// isolated vertices and the complement of the 3-star both produce a triangle
// and decode to the known ambiguous pair.
void run_token_jump(Report& r) {
  SweepOptions options;
  options.kind = Kind::TJ;
  options.rule = KRule::Fixed;
  options.fixed_k = 2;
  options.n_max = 6;
  options.seeds = {1, 2, 3};
  SweepResult result = sweep(options);
  r.require(result.summary.failed == 0 && result.summary.errored == 0,
            "not reconstructed: " + join(failed_records(result)));
  r.require(result.summary.total > 0 && result.summary.skipped > 0,
            "expected both attempted and skipped classes");
  int universal = 0, small_alpha = 0, disconnected = 0;
  std::vector<std::string> unknown;
  bool ambiguous_note = false;
  for (const RoundtripRecord& record : result.records) {
    if (record.status == RoundtripRecord::Status::Skipped) {
      if (record.detail == "universal-vertex") ++universal;
      else if (record.detail == "independence-number-below-k") ++small_alpha;
      else if (record.detail == "disconnected-reconfiguration-graph") ++disconnected;
      else unknown.push_back(record.graph6 + ": " + record.detail);
    } else if (record.detail == "ambiguous-preimage-match") {
      ambiguous_note = true;
    }
  }
  r.require(unknown.empty(), "unknown skip reasons: " + join(unknown));
  r.require(ambiguous_note, "no class matched through the ambiguous pair");

  const Graph co_claw = complement(complete_bipartite(1, 3));
  r.require(build_token(edgeless(3), 2, Kind::TJ).graph == complete_graph(3),
            "two-token jump graph of 3 isolated vertices is not a triangle");
  r.require(build_token(co_claw, 2, Kind::TJ).graph == complete_graph(3),
            "two-token jump graph of the 3-star complement is not a triangle");
  Tj2Result decoded = reconstruct_tj2(strip(build_token(edgeless(3), 2, Kind::TJ), 1));
  r.require(!decoded.unique && decoded.ambiguous_preimages.size() == 2,
            "triangle input did not report exactly two preimages");
  bool has_isolated = false, has_co_claw = false;
  for (const Graph& preimage : decoded.ambiguous_preimages) {
    if (is_isomorphic(preimage, edgeless(3))) has_isolated = true;
    if (is_isomorphic(preimage, co_claw)) has_co_claw = true;
  }
  r.require(has_isolated && has_co_claw,
            "the two preimages are not the known ambiguous pair");
  r.note = std::to_string(result.summary.reconstructed) + "/" +
           std::to_string(result.summary.total) + " in-scope round-trips; skipped " +
           std::to_string(universal) + " universal-vertex, " +
           std::to_string(small_alpha) + " small-independence, " +
           std::to_string(disconnected) + " disconnected classes";
}

// 11. Complete-joining a block that can never hold two tokens leaves all
// three two-token reconfiguration graphs identical, labels included.
void run_join_padding(Report& r) {
  const Graph g = path_graph(4);
  const Graph padded = join_padding(g, 2, complete_graph(3));
  r.require(!is_isomorphic(g, padded).has_value(),
            "padding produced an isomorphic graph");
  for (Kind rule : {Kind::TJ, Kind::TS, Kind::TAR}) {
    ReconfigGraph a = build_token(g, 2, rule);
    ReconfigGraph b = build_token(padded, 2, rule);
    r.require(a.token_labels == b.token_labels,
              std::string(kind_name(rule)) + ": token labels differ after padding");
    r.require(a.graph == b.graph,
              std::string(kind_name(rule)) + ": edges differ after padding");
  }
  r.note = "4-vertex path vs its 7-vertex padding, identical labelled graphs "
           "for all three rules";
}

// 12. The library agrees with the slow brute-force implementations on every
// graph on <= 4 vertices, and with the exhaustive root search on every
// connected graph on <= 5 vertices.
void run_oracles(Report& r) {
  const std::vector<Graph> classes = graph_catalog(4);

  for (const Graph& g : classes) {
    const std::string name = to_graph6(g);
    r.require(chromatic_number(g) == oracle::chromatic(g),
              name + ": chromatic number disagrees with the oracle");
    for (int k = 1; k <= 5; ++k)
      r.require(static_cast<long long>(enumerate_colourings(g, k).size()) ==
                    oracle::colouring_count(g, k),
                name + ": colouring count disagrees at k=" + std::to_string(k));
    for (int s = 0; s <= 2; ++s) {
      auto mine = independent_sets(g, s);
      auto theirs = oracle::independent_sets(g, s);
      std::sort(mine.begin(), mine.end());
      std::sort(theirs.begin(), theirs.end());
      r.require(mine == theirs, name + ": independent sets disagree at min size " +
                                    std::to_string(s));
    }
  }

  for (const Graph& g : classes)
    for (const Graph& h : classes) {
      auto witness = is_isomorphic(g, h);
      r.require(witness.has_value() == oracle::isomorphic(g, h),
                to_graph6(g) + " vs " + to_graph6(h) +
                    ": isomorphism disagrees with the oracle");
      if (witness)
        r.require(witness->verify(g, h),
                  to_graph6(g) + " vs " + to_graph6(h) + ": witness fails to verify");
    }

  for (const Graph& g : classes) {
    if (g.n() == 0) continue;
    const int k = chromatic_number(g) + 1;
    ReconfigGraph rr = build_kempe(g, k);
    bool agree = true;
    for (int i = 0; agree && i < rr.graph.n(); ++i)
      for (int j = i + 1; agree && j < rr.graph.n(); ++j)
        if (rr.graph.has_edge(i, j) !=
            oracle::kempe_adjacent(g, rr.colour_labels[i], rr.colour_labels[j]))
          agree = false;
    r.require(agree, to_graph6(g) + ": Kempe adjacency disagrees with the oracle");
  }

  for (const Graph& g : classes) {
    if (g.n() == 0) continue;
    ReconfigGraph rr = build_token(g, 1, Kind::TAR);
    for (const Component& component : connected_components(rr.graph)) {
      const auto all = oracle::layerings(component.graph);
      std::optional<Layering> mine;
      std::string thrown;
      try {
        mine = find_layering(component.graph);
      } catch (const Error& e) {
        thrown = to_string(e.kind());
      }
      const std::string name = to_graph6(g) + " component of " +
                               std::to_string(component.graph.n()) + " vertices";
      if (all.empty()) {
        r.require(thrown == "no-layering", name + ": expected no layering");
      } else if (all.size() > 1) {
        r.require(thrown == "ambiguous-layering",
                  name + ": expected an ambiguous layering");
      } else if (!mine) {
        r.problems.push_back(name + ": layering search threw " + thrown);
      } else {
        std::vector<int> assignment(component.graph.n(), 0);
        for (std::size_t layer = 0; layer < mine->layers.size(); ++layer)
          for (int v : mine->layers[layer]) assignment[v] = static_cast<int>(layer) + 1;
        r.require(assignment == all.front(),
                  name + ": layering differs from the oracle's unique one");
      }
    }
  }

  int roots_checked = 0;
  for (const Graph& l : graph_catalog(5)) {
    if (l.n() == 0 || !is_connected(l)) continue;
    ++roots_checked;
    const std::string name = to_graph6(l);
    const std::vector<Graph> roots = oracle::line_roots(l, l.n() + 1);
    const LineRoot mine = line_graph_root(l);
    if (roots.empty()) {
      r.require(mine.status == LineRoot::Status::NotLineGraph,
                name + ": oracle finds no root but the library does");
    } else if (roots.size() == 1) {
      r.require(mine.status == LineRoot::Status::Unique &&
                    is_isomorphic(*mine.root, roots.front()).has_value(),
                name + ": unique root disagrees with the oracle");
    } else {
      r.require(roots.size() == 2 && mine.status == LineRoot::Status::AmbiguousTriangle,
                name + ": oracle finds " + std::to_string(roots.size()) +
                    " roots but the library reports " +
                    (mine.status == LineRoot::Status::Unique ? "a unique root"
                                                             : "no root"));
    }
  }
  r.note = "19 classes against all six oracles; " + std::to_string(roots_checked) +
           " connected graphs against the exhaustive root search";
}

}  // namespace

int main() {
  struct Entry {
    const char* title;
    void (*run)(Report&);
  };
  const Entry entries[] = {
      {"single-vertex round-trip at k = chi+1", run_single_roundtrip},
      {"fast candidate at every vertex, k = min{n,2*maxdeg}+1", run_fast_every_vertex},
      {"frozen fixed-point counts", run_fixed_points},
      {"Kempe round-trip at k = chi+2 and Cayley matches", run_kempe},
      {"negative controls at k = chi", run_negative_controls},
      {"join-chain family: byte-identical labelled recolouring graphs", run_join_chain_family},
      {"spare-colour family: restriction bijection", run_spare_colour_family},
      {"one- and zero-token observations", run_token_observations},
      {"add/remove round-trips and even-cycle inversion", run_tar},
      {"two-token jump sweep and the ambiguous pair", run_token_jump},
      {"join padding: identical labelled token graphs", run_join_padding},
      {"oracle agreement on small graphs", run_oracles},
  };

  int failed = 0;
  int index = 0;
  for (const Entry& entry : entries) {
    ++index;
    Report report;
    const auto start = std::chrono::steady_clock::now();
    try {
      entry.run(report);
    } catch (const std::exception& e) {
      report.problems.push_back(std::string("threw: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (report.problems.empty()) {
      std::printf("[PASS] %2d %s%s%s (%.1fs)\n", index, entry.title,
                  report.note.empty() ? "" : ": ", report.note.c_str(), seconds);
    } else {
      ++failed;
      std::printf("[FAIL] %2d %s: %s (%.1fs)\n", index, entry.title,
                  join(report.problems, 4).c_str(), seconds);
    }
    std::fflush(stdout);
  }
  if (failed == 0)
    std::printf("all 12 checks passed\n");
  else
    std::printf("%d of 12 checks failed\n", failed);
  return failed;
}
