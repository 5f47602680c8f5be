#include "doctest.h"
#include "symstab/density.hpp"
#include "symstab/edit_distance.hpp"
#include "symstab/finite_partite.hpp"
#include "symstab/objective.hpp"
#include "symstab/partite_vector.hpp"

using namespace symstab;

TEST_CASE("partite vector invariants") {
  const PartiteVector x({ratio(3, 5)});
  CHECK(x.clique_mass() == ratio(2, 5));
  CHECK(x.extended_support() == std::vector<int>{0, 1});
  CHECK_THROWS(PartiteVector({ratio(1, 3), ratio(1, 2)}));
  CHECK_THROWS(PartiteVector({ratio(3, 4), ratio(1, 2)}));
  CHECK(PartiteVector::from_unsorted({ratio(1, 3), 0, ratio(1, 2)}) == PartiteVector({ratio(1, 2), ratio(1, 3)}));
}

TEST_CASE("partite vector JSON") {
  const PartiteVector x({ratio(3, 5)});
  CHECK(partite_vector_to_json(x) == R"({"parts":["3/5"],"x0":"2/5"})");
  CHECK(partite_vector_from_json(partite_vector_to_json(x)) == x);
  CHECK_THROWS(partite_vector_from_json(R"({"x0":"0","parts":["1/3","2/3"]})"));
  CHECK_THROWS(partite_vector_from_json(R"({"x0":"1/2","parts":["1/3"]})"));
}

TEST_CASE("realisations") {
  CHECK(realisation(5, PartiteVector()).part_sizes == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(realisation(7, PartiteVector::uniform(2)).part_sizes == std::vector<int>{4, 3});
  CHECK(realisation(10, PartiteVector({ratio(3, 5)})).part_sizes == std::vector<int>{6, 1, 1, 1, 1});
}

TEST_CASE("lambda of a vector") {
  CHECK(lambda_of_vector(ObjectiveSpec::complete_partite({2, 1, 1, 1}), PartiteVector::uniform(8)) == ratio(525, 1024));
  CHECK(lambda_of_vector(ObjectiveSpec::complete_partite({3, 1, 1}), PartiteVector({ratio(3, 5)})) == ratio(216, 625));
  CHECK(lambda_of_vector(ObjectiveSpec::complete_partite({4}), PartiteVector({Rational(1)})) == 1);
}

TEST_CASE("closed form density") {
  CHECK(density_formula({2, 2}, PartiteVector::uniform(2)) == ratio(3, 8));
  CHECK(density_formula({2, 1}, PartiteVector::uniform(2)) == ratio(3, 4));
  CHECK(density_formula({2, 1, 1}, PartiteVector::uniform(5)) == ratio(72, 125));
  const ObjectiveSpec mixed = ObjectiveSpec::parse("SUM 2*KP 2,1 + -1*KP 3");
  const PartiteVector x({ratio(1, 2), ratio(1, 3)});
  CHECK(lambda_closed_form(mixed, x) == lambda_of_vector(mixed, x));
}

TEST_CASE("partite counts") {
  CHECK(count_partite({2, 1, 1, 1}, make_shape(std::vector<int>(8, 2))) == 2240);
  CHECK(count_partite({3}, make_shape({7})) == 35);
  CHECK(count_partite({1, 1, 1}, make_shape({2, 2, 2})) == 8);
}

TEST_CASE("finite realisation density converges") {
  const ObjectiveSpec spec = ObjectiveSpec::complete_partite({2, 2});
  const PartiteVector x({ratio(1, 2), ratio(1, 3)});
  const Rational limit = lambda_of_vector(spec, x);
  const Rational a = abs(finite_lambda(spec, x, 60) - limit);
  const Rational b = abs(finite_lambda(spec, x, 600) - limit);
  CHECK(b < a);
  CHECK(b <= Rational(8 * 16, 600));
  const Graph g = shape_graph(realisation(12, x));
  CHECK(finite_lambda(spec, x, 12) == lambda_graph(spec, g).lambda);
}

TEST_CASE("edit distance") {
  CHECK(edit_distance_vectors(PartiteVector::uniform(2), PartiteVector()) == ratio(1, 2));
  CHECK(edit_distance_vectors(PartiteVector({Rational(1)}), PartiteVector::uniform(2)) == ratio(1, 2));
  CHECK(edit_distance_vectors(PartiteVector::uniform(3), PartiteVector::uniform(3)) == 0);
  const Graph a = Graph::complete_partite(std::vector<int>{4, 4});
  const Graph b = Graph::complete_partite(std::vector<int>{5, 3});
  CHECK(edit_distance_exact(a, a) == 0);
  CHECK(edit_distance_exact(a, b) == edit_distance_exact(b, a));
  CHECK(edit_distance_exact(a, b) > 0);
  // Finite and limit distances agree up to discretisation.
  CHECK(abs(edit_distance_exact(a, b) - edit_distance_vectors(PartiteVector::uniform(2), PartiteVector({ratio(5, 8), ratio(3, 8)}))) <= ratio(18, 64));
}
