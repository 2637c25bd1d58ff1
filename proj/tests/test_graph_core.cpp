#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "reconf/catalog.hpp"
#include "reconf/chromatic.hpp"
#include "reconf/graph.hpp"
#include "reconf/iso.hpp"
#include "reconf/line_root.hpp"

using namespace reconf;

namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

std::vector<Graph> connected_catalog(int n_max) {
  std::vector<Graph> out;
  for (const Graph& g : graph_catalog(n_max))
    if (g.n() > 0 && is_connected(g)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("graph construction and adjacency") {
  Graph g(4);
  CHECK(g.n() == 4);
  CHECK(g.edge_count() == 0);
  g.add_edge(2, 0);
  g.add_edge(0, 2);  // repeated edges collapse
  g.add_edge(1, 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK(!g.has_edge(0, 1));
  CHECK(g.neighbours(2) == std::vector<int>{0, 1});
  CHECK(g.degree(2) == 2);
  CHECK(g.degree(3) == 0);
  CHECK(g.max_degree() == 2);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});

  CHECK_THROWS_AS(g.add_edge(1, 1), Error);
  CHECK_THROWS_AS(g.add_edge(0, 4), Error);
  CHECK_THROWS_AS(g.add_edge(-1, 0), Error);

  Graph h = Graph::from_edges(4, {{0, 2}, {1, 2}});
  CHECK(g == h);
}

TEST_CASE("standard families have the right shape") {
  CHECK(edgeless(3).edge_count() == 0);
  CHECK(path_graph(1).edge_count() == 0);
  CHECK(path_graph(4).edges() ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(cycle_graph(3) == complete_graph(3));
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK_THROWS_AS(cycle_graph(2), Error);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(complete_bipartite(2, 3).edge_count() == 6);
  CHECK(complete_bipartite(2, 3).max_degree() == 3);
}

TEST_CASE("complement, join, permutation, induced subgraph") {
  CHECK(complement(complete_graph(4)) == edgeless(4));
  CHECK(complement(complement(path_graph(5))) == path_graph(5));

  Graph join = complete_join(edgeless(2), edgeless(3));
  CHECK(join.n() == 5);
  CHECK(join.edge_count() == 6);
  CHECK(join.has_edge(0, 2));
  CHECK(!join.has_edge(0, 1));
  CHECK(!join.has_edge(2, 3));

  Graph p = permuted(path_graph(3), {2, 0, 1});  // v -> perm[v]
  CHECK(p.has_edge(2, 0));
  CHECK(p.has_edge(0, 1));
  CHECK(!p.has_edge(2, 1));

  Graph sub = induced_subgraph(cycle_graph(5), {0, 1, 3});
  CHECK(sub.n() == 3);
  CHECK(sub.edges() == std::vector<std::pair<int, int>>{{0, 1}});

  CHECK(common_neighbours(complete_bipartite(2, 3), 0, 1) == std::vector<int>{2, 3, 4});
  CHECK(common_neighbours(path_graph(4), 0, 3).empty());
}

TEST_CASE("connectivity and components") {
  CHECK(is_connected(Graph(0)));
  CHECK(is_connected(complete_graph(1)));
  CHECK(is_connected(path_graph(6)));
  CHECK(!is_connected(edgeless(2)));

  Graph two = Graph::from_edges(5, {{0, 3}, {1, 2}});  // plus isolated vertex 4
  auto comps = connected_components(two);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].original == std::vector<int>{0, 3});
  CHECK(comps[1].original == std::vector<int>{1, 2});
  CHECK(comps[2].original == std::vector<int>{4});
  CHECK(comps[0].graph.edge_count() == 1);
  CHECK(comps[2].graph.n() == 1);

  CHECK(is_clique(complete_graph(4), {0, 2, 3}));
  CHECK(!is_clique(cycle_graph(4), {0, 1, 2}));
  CHECK(is_clique(cycle_graph(4), {}));
}

TEST_CASE("isomorphism on known pairs") {
  CHECK(is_isomorphic(cycle_graph(4), complete_bipartite(2, 2)).has_value());
  CHECK(is_isomorphic(cycle_graph(5), complement(cycle_graph(5))).has_value());
  CHECK(!is_isomorphic(path_graph(4), complete_bipartite(1, 3)).has_value());
  CHECK(!is_isomorphic(path_graph(3), path_graph(4)).has_value());

  // The complement of C_6 is the triangular prism.
  const Graph prism = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  auto witness = is_isomorphic(complement(cycle_graph(6)), prism);
  REQUIRE(witness.has_value());
  CHECK(witness->verify(complement(cycle_graph(6)), prism));
  // A wrong mapping must not verify.
  IsoWitness broken = *witness;
  std::swap(broken.mapping[0], broken.mapping[1]);
  CHECK(!broken.verify(complement(cycle_graph(6)), prism));
}

TEST_CASE("isomorphism agrees with the all-permutations oracle") {
  const auto classes = graph_catalog(5);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i; j < classes.size(); ++j) {
      const bool expected = oracle::isomorphic(classes[i], classes[j]);
      const auto witness = is_isomorphic(classes[i], classes[j]);
      CHECK(witness.has_value() == expected);
      if (witness) CHECK(witness->verify(classes[i], classes[j]));
    }
}

TEST_CASE("catalog classes are distinct and permutations collapse onto them") {
  const auto classes = graph_catalog(4);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      CHECK(!oracle::isomorphic(classes[i], classes[j]));
  CHECK(is_isomorphic(permuted(path_graph(4), {3, 1, 0, 2}), path_graph(4)).has_value());
}

TEST_CASE("chromatic number on known graphs") {
  CHECK(chromatic_number(Graph(0)) == 0);
  CHECK(chromatic_number(edgeless(5)) == 1);
  CHECK(chromatic_number(complete_graph(6)) == 6);
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(cycle_graph(6)) == 2);
  CHECK(chromatic_number(complete_bipartite(3, 4)) == 2);

  // Petersen graph: outer 5-cycle, inner 5-star, spokes.
  Graph petersen(10);
  for (int i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(5 + i, 5 + (i + 2) % 5);
    petersen.add_edge(i, 5 + i);
  }
  CHECK(chromatic_number(petersen) == 3);

  CHECK(colourable(cycle_graph(5), 3));
  CHECK(!colourable(cycle_graph(5), 2));
  CHECK(colourable(Graph(0), 0));
}

TEST_CASE("chromatic number matches exhaustive search on every small class") {
  for (const Graph& g : graph_catalog(6))
    CHECK(chromatic_number(g) == oracle::chromatic(g));
}

TEST_CASE("independent set enumeration") {
  // Sequence order: a set precedes its extensions, smaller leading vertex first.
  auto sets = independent_sets(path_graph(3), 0);
  REQUIRE(sets.size() == 5);
  CHECK(sets[0] == std::vector<int>{});
  CHECK(sets[1] == std::vector<int>{0});
  CHECK(sets[2] == std::vector<int>{0, 2});
  CHECK(sets[3] == std::vector<int>{1});
  CHECK(sets[4] == std::vector<int>{2});
  CHECK(independent_sets(path_graph(3), 1).size() == 4);
  CHECK(independent_sets(path_graph(3), 2).size() == 1);

  for (const Graph& g : graph_catalog(5))
    for (int min_size = 0; min_size <= 3; ++min_size) {
      auto mine = independent_sets(g, min_size);
      auto expected = oracle::independent_sets(g, min_size);
      std::sort(mine.begin(), mine.end());
      std::sort(expected.begin(), expected.end());
      CHECK(mine == expected);
    }

  CHECK(independence_number(complete_graph(4)) == 1);
  CHECK(independence_number(cycle_graph(7)) == 3);
  CHECK(independence_number(Graph(0)) == 0);
  CHECK(independence_number(edgeless(6)) == 6);
}

TEST_CASE("line graphs of known graphs") {
  CHECK(line_graph(path_graph(4)).graph == path_graph(3));
  CHECK(is_isomorphic(line_graph(cycle_graph(5)).graph, cycle_graph(5)).has_value());
  CHECK(is_isomorphic(line_graph(complete_bipartite(1, 3)).graph, complete_graph(3))
            .has_value());

  auto result = line_graph(path_graph(3));
  REQUIRE(result.vertex_edge.size() == 2);
  CHECK(result.vertex_edge[0] == std::pair<int, int>{0, 1});
  CHECK(result.vertex_edge[1] == std::pair<int, int>{1, 2});
  CHECK(line_graph(edgeless(4)).graph.n() == 0);
}

TEST_CASE("line graph roots on known inputs") {
  auto triangle = line_graph_root(complete_graph(3));
  CHECK(triangle.status == LineRoot::Status::AmbiguousTriangle);
  CHECK(!triangle.root.has_value());

  auto five_cycle = line_graph_root(cycle_graph(5));
  REQUIRE(five_cycle.status == LineRoot::Status::Unique);
  CHECK(is_isomorphic(*five_cycle.root, cycle_graph(5)).has_value());

  auto path = line_graph_root(path_graph(3));
  REQUIRE(path.status == LineRoot::Status::Unique);
  CHECK(is_isomorphic(*path.root, path_graph(4)).has_value());

  CHECK(line_graph_root(complete_bipartite(1, 3)).status == LineRoot::Status::NotLineGraph);

  CHECK(kind_of([] { line_graph_root(edgeless(2)); }) == ErrorKind::NotConnected);

  // Conventions for degenerate sizes.
  auto empty = line_graph_root(Graph(0));
  REQUIRE(empty.status == LineRoot::Status::Unique);
  CHECK(empty.root->n() == 1);
  auto single = line_graph_root(complete_graph(1));
  REQUIRE(single.status == LineRoot::Status::Unique);
  CHECK(*single.root == complete_graph(2));
}

TEST_CASE("line graph root inverts the line graph on every small connected graph") {
  for (const Graph& g : connected_catalog(6)) {
    const Graph l = line_graph(g).graph;
    if (g.n() == 1) continue;  // L(K_1) is empty; the empty input roots to K_1
    auto root = line_graph_root(l);
    if (is_isomorphic(l, complete_graph(3))) {
      // Both K_3 and the 3-star produce this line graph.
      CHECK(root.status == LineRoot::Status::AmbiguousTriangle);
    } else {
      REQUIRE(root.status == LineRoot::Status::Unique);
      CHECK(is_isomorphic(*root.root, g).has_value());
    }
  }
}

TEST_CASE("line graph roots agree with brute-force enumeration") {
  for (const Graph& l : connected_catalog(4)) {
    auto expected = oracle::line_roots(l, l.n() + 1);
    if (is_isomorphic(l, complete_graph(3))) {
      REQUIRE(expected.size() == 2);  // the oracle sees both preimages
      CHECK(line_graph_root(l).status == LineRoot::Status::AmbiguousTriangle);
    } else if (expected.empty()) {
      CHECK(line_graph_root(l).status == LineRoot::Status::NotLineGraph);
    } else {
      REQUIRE(expected.size() == 1);
      auto root = line_graph_root(l);
      REQUIRE(root.status == LineRoot::Status::Unique);
      CHECK(is_isomorphic(*root.root, expected.front()).has_value());
    }
  }
}
