#include "doctest.h"
#include "symstab/objective.hpp"
#include "symstab/partite_vector.hpp"
#include "symstab/strictness.hpp"
#include "json.hpp"

using namespace symstab;

TEST_CASE("C4 is strict at the balanced split") {
  const ObjectiveSpec c4 = ObjectiveSpec::complete_partite({2, 2});
  const PartiteVector x = PartiteVector::uniform(2);
  const Str1Result s1 = check_str1(c4, x);
  CHECK(s1.flips.size() == 4);
  CHECK(s1.minimum > 0);
  const Str2Result s2 = check_str2(c4, x);
  REQUIRE(s2.c.has_value());
  CHECK(*s2.c > 0);
  CHECK_FALSE(s2.infeasible);
  const StrictnessReport r = strictness_certificate(c4, {x});
  CHECK(r.pass);
  CHECK(r.c == std::min(r.c1, r.c2));
  CHECK(nlohmann::json::parse(strictness_to_json(r))["pass"] == true);
}

TEST_CASE("K2111 and K311") {
  const ObjectiveSpec a = ObjectiveSpec::complete_partite({2, 1, 1, 1});
  CHECK(strictness_certificate(a, {PartiteVector::uniform(8)}).pass);
  const ObjectiveSpec b = ObjectiveSpec::complete_partite({3, 1, 1});
  CHECK(strictness_certificate(b, {PartiteVector({ratio(3, 5)})}).pass);
}

TEST_CASE("clone weights") {
  const PartiteVector x({ratio(1, 2), ratio(1, 4)});
  const std::vector<Rational> w = compute_w(x, clone_pattern(x, 1));
  CHECK(w.size() == x.extended_support().size());
  for (auto& v : w) CHECK(v >= 0);
}

TEST_CASE("margin test is exact") {
  // g(α) = 1 − α against c((1−α)·1/2 + 0): holds for c ≤ 2 only.
  const UPoly g = UPoly(1) - UPoly::variable();
  CHECK(str2_margin_holds(g, ratio(1, 2), 0, 2));
  CHECK_FALSE(str2_margin_holds(g, ratio(1, 2), 0, ratio(201, 100)));
}

TEST_CASE("sum objective fails at three") {
  const ObjectiveSpec spec = ObjectiveSpec::all_complete_partite_sum(3);
  const StrictnessReport r = strictness_certificate(spec, {PartiteVector::uniform(2)});
  CHECK_FALSE(r.pass);
  CHECK(r.c == 0);
}

TEST_CASE("finite strictness") {
  const ObjectiveSpec c4 = ObjectiveSpec::complete_partite({2, 2});
  const FiniteStrictness f = finite_strictness_check(c4, PartiteVector::uniform(2), 8);
  CHECK(f.pass);
  CHECK(f.clone_edits_zero);
  CHECK(f.c1 > 0);
}
