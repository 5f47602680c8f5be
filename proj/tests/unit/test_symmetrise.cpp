#include "doctest.h"
#include "symstab/density.hpp"
#include "symstab/objective.hpp"
#include "symstab/opt_search.hpp"
#include "symstab/symmetrise.hpp"

using namespace symstab;

TEST_CASE("complete partite input is left alone") {
  const ObjectiveSpec spec = ObjectiveSpec::complete_partite({2, 2});
  const Graph g = Graph::complete_partite(std::vector<int>{3, 2, 1});
  const SymmetrisationTrace t = symmetrise_full(spec, g);
  CHECK(t.steps.empty());
  CHECK(t.final_graph == g);
}

TEST_CASE("five-cycle under the C4 density") {
  const ObjectiveSpec spec = ObjectiveSpec::complete_partite({2, 2});
  const Graph c5 = Graph::cycle(5);
  const SymmetrisationTrace t = symmetrise_full(spec, c5);
  REQUIRE(complete_partite_shape_of(t.final_graph).has_value());
  const Rational out = lambda_graph(spec, t.final_graph).lambda;
  CHECK(out >= lambda_graph(spec, c5).lambda);
  CHECK(out == finite_opt(spec, 5).value);
  CHECK(out == brute_lambda_max(spec, 5).value);
  CHECK(trace_to_json(t).find("\"steps\"") != std::string::npos);
}

TEST_CASE("single vertex symmetrisation") {
  const ObjectiveSpec spec = ObjectiveSpec::complete_partite({2, 2});
  // K_{2,2} on {0,1 | 2,3}; vertex 4 joined to one vertex of each part.
  Graph g = Graph::complete_partite(std::vector<int>{2, 2, 1});
  for (int v = 0; v < 4; ++v) g.set_edge(4, v, v == 0 || v == 2);
  const SymmetrisationTrace t = symmetrise_vertex(spec, g, 4);
  Rational prev = lambda_graph(spec, g).lambda;
  for (auto& s : t.steps) {
    CHECK(s.pairs_edited == 1);
    CHECK(s.lambda_after >= prev);
    prev = s.lambda_after;
  }
  for (auto part : {std::pair{0, 1}, std::pair{2, 3}})
    CHECK(t.final_graph.adjacent(4, part.first) == t.final_graph.adjacent(4, part.second));
  // The best of the four complete-or-empty end states.
  Rational best(-1);
  for (int mask = 0; mask < 4; ++mask) {
    Graph h = g;
    for (int v = 0; v < 4; ++v) h.set_edge(4, v, (mask >> (v / 2)) & 1);
    best = std::max(best, lambda_graph(spec, h).lambda);
  }
  CHECK(prev <= best);

  Graph settled = g;
  for (int v = 0; v < 4; ++v) settled.set_edge(4, v, v < 2);
  CHECK(symmetrise_vertex(spec, settled, 4).steps.empty());
  CHECK_THROWS_AS(symmetrise_vertex(spec, Graph::cycle(5), 0), std::invalid_argument);
}

TEST_CASE("signed objectives may refuse") {
  // Penalising independent triples: every clone keeps or raises λ here, so the
  // run either completes monotonically or reports that no monotone clone exists.
  const ObjectiveSpec spec = ObjectiveSpec::parse("SUM -1*KP 3 + 1*KP 2,1");
  const Graph g = Graph::path(5);
  try {
    const SymmetrisationTrace t = symmetrise_full(spec, g);
    for (auto& s : t.steps) CHECK(s.lambda_after >= s.lambda_before);
  } catch (const SymmetrisationError&) {
    CHECK_FALSE(spec.symmetrisation_eligible());
  }
}
