#include <set>
#include <sstream>

#include "doctest.h"
#include "symstab/canonical.hpp"
#include "symstab/density.hpp"
#include "symstab/graph.hpp"
#include "symstab/objective.hpp"
#include "symstab/partite_vector.hpp"

using namespace symstab;

TEST_CASE("canonical keys identify isomorphism classes") {
  const Graph k3 = Graph::complete(3);
  Graph relabelled(3);
  relabelled.set_edge(2, 0, true);
  relabelled.set_edge(1, 2, true);
  relabelled.set_edge(0, 1, true);
  CHECK(canonical_key(k3) == canonical_key(relabelled));
  CHECK_FALSE(canonical_key(Graph::path(3)) == canonical_key(k3));

  std::set<std::string> classes;
  for (std::uint32_t code = 0; code < 64; ++code) classes.insert(canonical_key_of_code(4, code).to_string());
  CHECK(classes.size() == 11);
}

TEST_CASE("lambda of a graph") {
  const ObjectiveSpec c4 = ObjectiveSpec::complete_partite({2, 2});
  CHECK(lambda_graph(c4, Graph::complete_partite(std::vector<int>{3, 3})).lambda == ratio(9, 15));

  const ObjectiveSpec empty3 = ObjectiveSpec::complete_partite({3});
  CHECK(lambda_graph(empty3, Graph::empty(6)).lambda == 1);

  const ObjectiveSpec k2111 = ObjectiveSpec::complete_partite({2, 1, 1, 1});
  const Graph g = shape_graph(realisation(16, PartiteVector::uniform(8)));
  CHECK(lambda_graph(k2111, g).lambda == ratio(2240, 4368));
  CHECK(induced_count(Graph::complete_partite(std::vector<int>{2, 1, 1, 1}), g) == 2240);
}

TEST_CASE("vertex lambda") {
  const ObjectiveSpec empty3 = ObjectiveSpec::complete_partite({3});
  CHECK(lambda_vertex(empty3, Graph::empty(5), 2) == 1);

  const ObjectiveSpec k2111 = ObjectiveSpec::complete_partite({2, 1, 1, 1});
  const Graph g = shape_graph(realisation(16, PartiteVector::uniform(8)));
  const Rational whole = lambda_graph(k2111, g).lambda;
  for (int v : {0, 5, 15}) CHECK(lambda_vertex(k2111, g, v) == whole);
}

TEST_CASE("attaching a vertex to a complete partite graph") {
  const Graph g = Graph::complete_partite(std::vector<int>{2, 2, 1});
  const std::vector<std::vector<int>> parts = {{0, 1}, {2, 3}};
  const std::vector<int> clique = {4};
  // Clone of part 0: joined to part 1 and the clique.
  const Graph clone = attach(g, parts, clique, {false, true}, 1);
  auto shape = complete_partite_shape_of(clone);
  REQUIRE(shape);
  CHECK(shape->part_sizes == std::vector<int>{3, 2, 1});
  const Graph isolated = attach(g, parts, clique, {false, false}, 0);
  CHECK(isolated.degree(5) == 0);

  const Graph eights = Graph::complete_partite(std::vector<int>(8, 2));
  std::vector<std::vector<int>> eparts;
  for (int i = 0; i < 8; ++i) eparts.push_back({2 * i, 2 * i + 1});
  std::vector<bool> b(8, true);
  b[7] = false;
  CHECK(attach(eights, eparts, {}, b, 0).degree(16) == 14);
  CHECK_THROWS_AS(attach(g, parts, clique, {true}, 0), std::invalid_argument);
}

TEST_CASE("complete partite recognition") {
  auto s = complete_partite_shape_of(Graph::complete_partite(std::vector<int>{3, 2}));
  REQUIRE(s);
  CHECK(s->part_sizes == std::vector<int>{3, 2});
  auto k5 = complete_partite_shape_of(Graph::complete(5));
  REQUIRE(k5);
  CHECK(k5->part_sizes == std::vector<int>{1, 1, 1, 1, 1});
  CHECK_FALSE(complete_partite_shape_of(Graph::cycle(5)).has_value());
}

TEST_CASE("brute force maximum") {
  const BruteMax e = brute_lambda_max(ObjectiveSpec::complete_partite({3}), 5);
  CHECK(e.value == 1);
  REQUIRE(e.witnesses.size() == 1);
  CHECK(e.witnesses[0].to_graph().edge_count() == 0);

  const BruteMax cherry = brute_lambda_max(ObjectiveSpec::complete_partite({2, 1}), 6);
  bool partite = false;
  for (auto& w : cherry.witnesses) partite = partite || complete_partite_shape_of(w.to_graph()).has_value();
  CHECK(partite);

  const BruteMax c4 = brute_lambda_max(ObjectiveSpec::complete_partite({2, 2}), 6);
  const CanonicalKey k33 = canonical_key(Graph::complete_partite(std::vector<int>{3, 3}));
  bool found = false;
  for (auto& w : c4.witnesses) found = found || w == k33;
  CHECK(found);
}

TEST_CASE("graph text format") {
  std::istringstream in("# a path\nn 4\n0 1\n\n2 1\n2 3\n");
  const Graph g = read_graph(in);
  CHECK(g == Graph::path(4));
  std::ostringstream out;
  write_graph(out, g);
  std::istringstream back(out.str());
  CHECK(read_graph(back) == g);
  std::istringstream bad("n 3\n0 5\n");
  CHECK_THROWS(read_graph(bad));
}

TEST_CASE("objective mini-language") {
  const ObjectiveSpec a = ObjectiveSpec::parse("KP 2,1,1,1");
  CHECK(a.k() == 5);
  const ObjectiveSpec b = ObjectiveSpec::parse("SUM 1*KP 3 + -1*KP 1,1,1");
  CHECK(b.k() == 3);
  CHECK(lambda_graph(b, Graph::empty(4)).lambda == 1);
  CHECK(lambda_graph(b, Graph::complete(4)).lambda == -1);
  CHECK_THROWS_AS(ObjectiveSpec::parse("KQ 2"), std::invalid_argument);
  CHECK_THROWS_AS(ObjectiveSpec::parse("KP 9"), std::invalid_argument);
  CHECK(ObjectiveSpec::all_complete_partite_sum(3).symmetrisation_eligible());
}
