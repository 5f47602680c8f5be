#include "doctest.h"
#include "symstab/density.hpp"
#include "symstab/objective.hpp"
#include "symstab/partite_vector.hpp"
#include "symstab/perturbation.hpp"

using namespace symstab;

namespace {
const ObjectiveSpec& k2111() {
  static const ObjectiveSpec s = ObjectiveSpec::complete_partite({2, 1, 1, 1});
  return s;
}
const ObjectiveSpec& k311() {
  static const ObjectiveSpec s = ObjectiveSpec::complete_partite({3, 1, 1});
  return s;
}
}  // namespace

TEST_CASE("flip gradients") {
  const PartiteVector x = PartiteVector::uniform(8);
  CHECK(flip_gradient(k2111(), x, 1, 2) == ratio(150, 512));
  CHECK(flip_gradient(k2111(), x, 3, 3) == ratio(84, 512));
  CHECK(flip_gradient(ObjectiveSpec::complete_partite({3}), PartiteVector::uniform(2), 1, 1) == ratio(1, 2));
}

TEST_CASE("attachment polynomials") {
  const PartiteVector x({ratio(3, 5)});
  const UPoly a = UPoly::variable();
  CHECK(attach_polynomial(k311(), x, {false, true}) == UPoly(ratio(216, 625)) * a);
  CHECK(attach_polynomial(k311(), x, {false, false}) == UPoly(ratio(216, 625)) * a * a);
  const PartiteVector e = PartiteVector::uniform(8);
  CHECK(attach_value(k2111(), e, pattern_from_mask(e, 0x7f, 1)) == ratio(525, 1024));
}

TEST_CASE("vertex gradients") {
  const PartiteVector e = PartiteVector::uniform(8);
  CHECK(vertex_gradient(k2111(), e, clone_pattern(e, 1)) == 0);
  for (int i = 1; i <= 8; ++i) CHECK(vertex_gradient(k2111(), e, clone_pattern(e, i)) == 0);
  // Joined to all eight parts: (4!/8^4) C(8,3)(19/2 − 8) = 63/128.
  CHECK(vertex_gradient(k2111(), e, pattern_from_mask(e, 0xff, 1)) == ratio(525, 1024) - ratio(63, 128));
  const PartiteVector x({ratio(3, 5)});
  CHECK(vertex_gradient(k311(), x, clone_pattern(x, 0)) == 0);
  CHECK(vertex_gradient(k311(), x, clone_pattern(x, 1)) == 0);
}

TEST_CASE("partial derivatives and the Lagrange residual") {
  CHECK(partial_derivative(ObjectiveSpec::complete_partite({3}), PartiteVector({Rational(1)}), 1) == 3);
  const PartiteVector e = PartiteVector::uniform(8);
  for (int i = 1; i <= 8; ++i) CHECK(partial_derivative(k2111(), e, i) == Rational(5 * 525, 1024));
  CHECK(lagrange_residual(k2111(), e) == 0);
  CHECK(lagrange_residual(k311(), PartiteVector({ratio(3, 5)})) == 0);
  // Balanced two-part vectors are critical too; an unbalanced one is not.
  CHECK(lagrange_residual(k2111(), PartiteVector::uniform(2)) == 0);
  CHECK(lagrange_residual(k2111(), PartiteVector({ratio(1, 2), ratio(1, 4), ratio(1, 8), ratio(1, 8)})) > 0);
}

TEST_CASE("patterns") {
  const PartiteVector x({ratio(1, 2), ratio(1, 4)});
  const AttachmentPattern p = pattern_from_mask(x, 0b10, ratio(1, 3));
  CHECK_FALSE(p.joined(1));
  CHECK(p.joined(2));
  // Without clique mass the clique fraction is forced to 1.
  CHECK(normalise_pattern(PartiteVector::uniform(2), pattern_from_mask(PartiteVector::uniform(2), 0, 0)).alpha == 1);
}

TEST_CASE("wrong-pair comparison bounds") {
  const ObjectiveSpec c4 = ObjectiveSpec::complete_partite({2, 2});
  const Graph h_prime = shape_graph(realisation(12, PartiteVector::uniform(2)));
  const DiagnosticBounds same = compare_bounds(c4, h_prime, h_prime, ratio(1, 8));
  CHECK(same.wrong_pairs == 0);
  CHECK(same.difference == 0);
  CHECK(same.conclusion_i);
  CHECK(same.conclusion_ii);
  CHECK(same.conclusion_iii);

  const Graph one = flip(h_prime, 0, 11);
  const DiagnosticBounds d = compare_bounds(c4, one, h_prime, ratio(1, 8));
  CHECK(d.wrong_pairs == 1);
  CHECK(d.star);
  CHECK(d.difference > 0);
  CHECK(d.conclusion_ii);

  Graph star = h_prime;
  for (int v : {6, 7, 8}) star = flip(star, 0, v);
  const DiagnosticBounds s = compare_bounds(c4, star, h_prime, ratio(1, 8));
  CHECK(s.wrong_pairs == 3);
  CHECK(s.max_degree == 3);
  CHECK(s.star);
  CHECK(s.conclusion_ii);
}
