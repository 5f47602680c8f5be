#include "doctest.h"
#include "symstab/algebraic.hpp"
#include "symstab/branch_bound.hpp"
#include "symstab/certificates.hpp"
#include "symstab/interval.hpp"
#include "symstab/lp.hpp"
#include "symstab/matrix.hpp"
#include "symstab/multivariate.hpp"
#include "symstab/polynomial.hpp"

using namespace symstab;

namespace {
const UPoly X = UPoly::variable();
}

TEST_CASE("Sturm counts and root isolation") {
  const UPoly p = (X * X - UPoly(2)) * (X - UPoly(1));
  CHECK(real_root_count(p) == 3);
  CHECK(sturm_root_count(p, 0, 2) == 2);
  CHECK(sturm_root_count(p * p, 0, 2) == 2);
  const auto roots = isolate_roots(p, -2, 2, ratio(1, 1000));
  REQUIRE(roots.size() == 3);
  for (auto& [lo, hi] : roots) CHECK(hi - lo <= ratio(1, 1000));
  CHECK(positive_on(X * X + UPoly(1), -5, 5));
  CHECK(nonnegative_on(X * X, -1, 1));
  CHECK_FALSE(positive_on(X * X, -1, 1));
}

TEST_CASE("polynomial algebra") {
  const UPoly a = (X - UPoly(1)) * (X - UPoly(1)) * (X + UPoly(2));
  CHECK(gcd(a, a.derivative()) == X - UPoly(1));
  CHECK(squarefree_part(a).degree() == 2);
  const auto [q, r] = divmod(a, X - UPoly(1));
  CHECK(r.is_zero());
  CHECK(q * (X - UPoly(1)) == a);
  CHECK(interpolate({0, 1, 2}, {1, 2, 5}) == X * X + UPoly(1));
}

TEST_CASE("resultant eliminates a variable") {
  const std::vector<std::string> v{"x", "y"};
  const MPoly x = MPoly::variable(v, "x"), y = MPoly::variable(v, "y");
  // x² + y² − 2 and x − y meet where 2y² = 2.
  const MPoly r = resultant(x * x + y * y - Rational(2), x - y, "x");
  CHECK(r.evaluate(std::vector<Rational>{0, 1}) == 0);
  CHECK(r.evaluate(std::vector<Rational>{0, 2}) != 0);
}

TEST_CASE("algebraic numbers and intervals") {
  AlgebraicNumber s(X * X - UPoly(2), 1, 2);
  CHECK_FALSE(s.is_rational());
  s.refine(ratio(1, 1000000));
  CHECK(s.width() <= ratio(1, 1000000));
  CHECK(s.compare(ratio(141, 100)) > 0);
  CHECK(s.compare(ratio(142, 100)) < 0);
  CHECK(AlgebraicNumber(ratio(1, 2)).compare(ratio(1, 2)) == 0);

  const Interval i(Rational(-1), Rational(2));
  const Interval sq = i * i;
  CHECK(sq.contains(0));
  CHECK(sq.contains(4));
  CHECK((i + Interval(Rational(1))).hi == 3);
  CHECK(Interval(ratio(1, 2), Rational(1)).pow(2).lo == ratio(1, 4));
}

TEST_CASE("branch and bound") {
  const UPoly p = X * (UPoly(1) - X);
  BBOptions o;
  o.tol = ratio(1, 10000);
  const BBResult r = bb_max_bound(p, 0, 1, o);
  CHECK(r.converged);
  CHECK(r.upper >= ratio(1, 4));
  CHECK(r.upper - ratio(1, 4) <= ratio(1, 10000));
}

TEST_CASE("positive semidefinite checks") {
  CHECK(psd_check(RationalMatrix({{2, -1}, {-1, 2}})));
  CHECK_FALSE(psd_check(RationalMatrix({{1, 2}, {2, 1}})));
  CHECK(RationalMatrix({{2, -1}, {-1, 2}}).determinant() == 3);
}

TEST_CASE("LP and positive multipliers") {
  // max x + y subject to x ≤ 1, y ≤ 2.
  const LpResult r = simplex_max({{1, 0}, {0, 1}}, {1, 2}, {1, 1});
  REQUIRE(r.optimal);
  CHECK(r.value == doctest::Approx(3));
  // x² − x + 1 has no real roots; a multiplier makes all coefficients positive.
  const UPoly p = X * X - X + UPoly(1);
  const MultiplierResult m = positive_multiplier_lp(p, 4);
  REQUIRE(m.r1.has_value());
  CHECK(positive_multiplier_verifies(p, *m.r1));
}

TEST_CASE("certificate verdicts") {
  CHECK(certify_k2111().verdict == Verdict::Pass);
  CHECK(certify_k311().verdict == Verdict::Pass);
  CHECK(certify_kst(2, 2).verdict == Verdict::Pass);
  CHECK(certify_kst(1, 3).verdict == Verdict::Pass);
  CHECK(certify_krt(2, 3).verdict == Verdict::Pass);
  CHECK(certify_krt(3, 2).verdict == Verdict::Inconclusive);
  CHECK_THROWS_AS(certify_kst(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(certify_krt(1, 2), std::invalid_argument);
  const CertificateReport r = certify_k2111();
  CHECK(r.lambda_max == "525/1024");
  CHECK(r.first_failure.empty());
}
