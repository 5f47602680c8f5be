#include "doctest.h"
#include "symstab/objective.hpp"
#include "symstab/opt_search.hpp"

using namespace symstab;

TEST_CASE("finite optimum over complete partite graphs") {
  const ObjectiveSpec c4 = ObjectiveSpec::complete_partite({2, 2});
  const FiniteOptResult r = finite_opt(c4, 6);
  CHECK(r.shapes.size() == 1);
  CHECK(r.shapes[0] == make_shape({3, 3}));
  CHECK(r.value == lambda_of_shape(c4, make_shape({3, 3})));
  CHECK(r.evaluated > 0);
}

TEST_CASE("continuous search is seeded and finds the C4 optimum") {
  const ObjectiveSpec c4 = ObjectiveSpec::complete_partite({2, 2});
  OptOptions o;
  o.starts = 40;
  o.seed = 7;
  o.max_support = 4;
  const CandidateSet a = continuous_opt(c4, o);
  REQUIRE_FALSE(a.maximisers.empty());
  const Candidate& best = a.candidates[a.maximisers[0]];
  REQUIRE(best.snapped.has_value());
  CHECK(*best.snapped == PartiteVector::uniform(2));
  CHECK(best.exact_value == ratio(3, 8));
  CHECK(best.exact_residual == 0);
  CHECK(candidate_set_to_json(a) == candidate_set_to_json(continuous_opt(c4, o)));
}

TEST_CASE("K_{s,t} maximiser") {
  const KstResult half = kst_maximiser(2, 3);
  CHECK(half.half);
  CHECK(half.alpha.is_rational());
  CHECK(*half.alpha.rational() == ratio(1, 2));

  const KstResult off = kst_maximiser(1, 4);
  CHECK_FALSE(off.half);
  REQUIRE(off.x_root.has_value());
  CHECK(off.alpha.compare(ratio(1, 2)) > 0);
  CHECK(off.inducibility.lo <= off.inducibility.hi);
  CHECK(kst_f(1, 3)(ratio(1, 2)) == ratio(1, 8));
  CHECK(kst_h(2, 5)(1) == 0);
}
