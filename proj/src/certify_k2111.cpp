#include "json.hpp"

#include "symstab/branch_bound.hpp"
#include "symstab/certificates.hpp"
#include "symstab/density.hpp"
#include "symstab/multivariate.hpp"
#include "symstab/perturbation.hpp"
#include "symstab/strictness.hpp"

namespace symstab {

namespace {

const std::vector<std::string> kYL{"y", "l"};

// ℓ⁴·h_ℓ(y) as a polynomial in (y, ℓ), with u = 1 − y and p = u/ℓ.
MPoly scaled_h() {
  const MPoly y = MPoly::variable(kYL, "y"), l = MPoly::variable(kYL, "l");
  const MPoly one = MPoly::constant(kYL, 1);
  const MPoly u = one - y;
  const MPoly bracket = (l - u).pow(3) - Rational(3) * (l - one) * u.pow(2) * (l - Rational(2) * u) -
                        (l - one) * u.pow(3);
  return Rational(10) * u.pow(2) * bracket;
}

MPoly q_yl() {
  const MPoly y = MPoly::variable(kYL, "y"), l = MPoly::variable(kYL, "l");
  auto c = [](long v) { return Rational(v); };
  return MPoly::constant(kYL, -30) + c(49) * l - c(21) * l.pow(2) + c(2) * l.pow(3) + c(90) * y -
         c(123) * l * y + c(33) * l.pow(2) * y - c(90) * y.pow(2) + c(99) * l * y.pow(2) -
         c(12) * l.pow(2) * y.pow(2) + c(30) * y.pow(3) - c(25) * l * y.pow(3);
}

// h_ℓ(y) for a fixed ℓ, from its defining expression.
UPoly h_fixed(int ell) {
  const UPoly y = UPoly::variable();
  const UPoly p = (UPoly(1) - y) * UPoly(ratio(1, ell));
  const UPoly bracket = (UPoly(1) - p).pow(3) * UPoly(ratio(1, 6)) -
                        UPoly(ratio(ell - 1, 2)) * p.pow(2) * (UPoly(1) - UPoly(2) * p) -
                        UPoly(ratio(ell - 1, 6)) * p.pow(3);
  return UPoly(Rational(60 * ell)) * p.pow(2) * bracket;
}

bool all_coefficients(const UPoly& p, int sign) {
  for (auto& c : p.coeffs())
    if (sign > 0 ? c <= 0 : c >= 0) return false;
  return !p.is_zero();
}

std::string poly_str(const UPoly& p, const std::string& var) { return p.to_string(var); }

}  // namespace

CertificateReport certify_k2111() {
  CertificateReport rep;
  rep.certificate = "k2111";
  const Rational lambda0(525, 1024);
  const ObjectiveSpec spec = ObjectiveSpec::complete_partite({2, 1, 1, 1});
  const PartiteVector a = PartiteVector::uniform(8);

  // (1) derivative identity ∂_y(ℓ⁴ h) = 10 (y − 1) q.
  const MPoly H = scaled_h();
  const MPoly q = q_yl();
  {
    const MPoly y = MPoly::variable(kYL, "y");
    const MPoly diff = H.derivative("y") - Rational(10) * (y - Rational(1)) * q;
    auto& c = rep.add("derivative_identity", diff.is_zero(), "d/dy h_l(y) = (10/l^4)(y-1) q(y), checked as a polynomial identity in (y,l)");
    c.values.push_back({"q", q.to_string()});
    // Consistency of the closed form with the direct expression at each small ℓ.
    bool consistent = true;
    for (int ell = 1; ell <= 12; ++ell) {
      const UPoly direct = h_fixed(ell);
      const UPoly closed = H.substitute("l", Rational(ell)).to_univariate("y");
      if (closed != direct * UPoly(pow(Rational(ell), 4))) consistent = false;
    }
    rep.add("h_closed_form_consistency", consistent, "l^4 h_l(y) agrees with the defining expression for l = 1..12");
  }

  // (2) q > 0 on [0,1] for every ℓ ≥ 8.
  {
    const UPoly q0 = q.substitute("y", Rational(0)).to_univariate("l");
    const UPoly q1 = q.substitute("y", Rational(1)).to_univariate("l");
    const MPoly qy = q.derivative("y");
    const UPoly d0 = qy.substitute("y", Rational(0)).to_univariate("l");
    const UPoly d1 = qy.substitute("y", Rational(1)).to_univariate("l");
    const UPoly lead = qy.coefficients_in("y").at(2).to_univariate("l");
    const UPoly s0 = q0.shift(8), s1 = q1.shift(8), sd0 = d0.shift(8), sd1 = d1.shift(8), slead = lead.shift(8);
    const UPoly expect_q0 = UPoly::from_coeffs({42, 97, 27, 2});
    const UPoly expect_d0 = UPoly::from_coeffs({1218, 405, 33});
    auto& c1 = rep.add("q0_shifted_basis", s0 == expect_q0 && all_coefficients(s0, 1),
                       "q(0) = 42 + 97(l-8) + 27(l-8)^2 + 2(l-8)^3");
    c1.values.push_back({"q(0) in m=l-8", poly_str(s0, "m")});
    auto& c2 = rep.add("q1_positive", q1 == UPoly::monomial(2, 3) && all_coefficients(s1, 1) , "q(1) = 2 l^3");
    c2.values.push_back({"q(1)", poly_str(q1, "l")});
    auto& c3 = rep.add("dq0_shifted_basis", sd0 == expect_d0 && all_coefficients(sd0, 1),
                       "q'(0) = 1218 + 405(l-8) + 33(l-8)^2");
    c3.values.push_back({"q'(0) in m=l-8", poly_str(sd0, "m")});
    auto& c4 = rep.add("dq1_positive", d1 == UPoly::monomial(9, 2) && all_coefficients(sd1, 1), "q'(1) = 9 l^2");
    c4.values.push_back({"q'(1)", poly_str(d1, "l")});
    auto& c5 = rep.add("dq_leading_negative", all_coefficients(slead, -1), "y^2-coefficient of q' is negative for l >= 8");
    c5.values.push_back({"coefficient", poly_str(lead, "l")});
    bool sturm = true;
    for (int ell = 8; ell <= 40; ++ell) {
      const UPoly ql = q.substitute("l", Rational(ell)).to_univariate("y");
      if (!positive_on(ql, 0, 1)) sturm = false;
    }
    rep.info("q_positive_sturm_l8_to_40", sturm, "independent Sturm confirmation for l = 8..40");
  }

  // (3) k(ℓ) = h_ℓ(0) decreasing for ℓ ≥ 8.
  {
    const UPoly N = H.substitute("y", Rational(0)).to_univariate("l");  // ℓ⁴ k(ℓ)
    const UPoly L = UPoly::variable();
    const UPoly expectN = UPoly(10) * (L - UPoly(1)) * (L - UPoly(2)) * (L - UPoly(3));
    rep.add("k_closed_form", N == expectN, "k(l) = 10(l-1)(l-2)(l-3)/l^4");
    // ℓ⁵ k′(ℓ) = ℓ N′ − 4N = −10 j(ℓ).
    const UPoly lhs = L * N.derivative() - UPoly(4) * N;
    const UPoly j = UPoly::from_coeffs({30, 60, 15, 1}).shift(-9);
    rep.add("k_derivative_identity", lhs == UPoly(-10) * j, "k'(l) = -10 j(l)/l^5");
    rep.add("j_shifted_positive", all_coefficients(j.shift(9), 1), "j(l) = (l-9)^3 + 15(l-9)^2 + 60(l-9) + 30");
    const Rational k8 = N(8) / pow(Rational(8), 4), k9 = N(9) / pow(Rational(9), 4);
    auto& c = rep.add("k9_below_k8", k8 == lambda0 && k9 == Rational(1120, 2187) && k9 < k8, "k(9) = 1120/2187 < 525/1024 = k(8)");
    c.values.push_back({"k(8)", to_string(k8)});
    c.values.push_back({"k(9)", to_string(k9)});
  }

  // (4) no ℓ ∈ [7] attains λ0.
  {
    const std::vector<std::string> yz{"y", "z"};
    for (int ell = 1; ell <= 7; ++ell) {
      const UPoly h = h_fixed(ell);
      const MPoly p1 = MPoly::from_univariate(yz, "y", h.derivative());
      const MPoly p2 = MPoly::variable(yz, "z") - MPoly::from_univariate(yz, "y", h);
      const UPoly elim = resultant(p1, p2, "y").to_univariate("z");
      const UPoly sq = squarefree_part(elim);
      const int roots = sturm_root_count(sq, lambda0, 1);
      auto& c = rep.add("eliminant_l" + std::to_string(ell), !elim.is_zero() && roots == 0,
                        "critical values of h_l: no root of the eliminant in (525/1024, 1]");
      c.values.push_back({"eliminant", elim.to_string("z")});
      c.values.push_back({"roots_in_range", std::to_string(roots)});
      if (ell == 1) {
        const UPoly target = UPoly::from_coeffs({0, -216, 625});
        rep.add("eliminant_l1_divisible", divides(target, elim), "eliminant for l = 1 is divisible by z(625z - 216)");
      }
      rep.add("h_l_at_zero_l" + std::to_string(ell), h(0) < lambda0, "h_l(0) < 525/1024").values.push_back({"h_l(0)", to_string(h(0))});
      BBOptions opt;
      const BBResult bb = bb_max_bound(h, 0, 1, opt);
      auto& b = rep.add("bb_h_l" + std::to_string(ell), bb.converged && bb.upper < lambda0,
                        "branch-and-bound upper bound of h_l on [0,1] below 525/1024 (tol 1e-6)");
      b.values.push_back({"upper", to_string(bb.upper)});
      b.values.push_back({"upper_approx", std::to_string(bb.upper.get_d())});
      b.values.push_back({"boxes", std::to_string(bb.boxes)});
    }
  }

  // Degenerate branch: a single part with clique mass.
  {
    const UPoly y = UPoly::variable();
    const UPoly g = UPoly(10) * y.pow(3) * (UPoly(1) - y).pow(2);
    const BBResult bb = bb_max_bound(g, 0, 1);
    auto& c = rep.add("single_part_limit", bb.converged && bb.upper < lambda0 && g(Rational(3, 5)) == Rational(216, 625),
                      "10 x0^3 (1-x0)^2 <= 216/625 + tol < 525/1024");
    c.values.push_back({"upper", to_string(bb.upper)});
  }

  // (5) the merge-step contradiction at a = 1/16.
  {
    std::vector<Rational> parts(7, Rational(1, 8));
    parts.push_back(Rational(1, 16));
    parts.push_back(Rational(1, 16));
    const Rational v = lambda_closed_form(spec, PartiteVector(parts));
    auto& c = rep.add("split_part_below", v < lambda0, "lambda(1/8 x7, 1/16, 1/16) < 525/1024");
    c.values.push_back({"lambda", to_string(v)});
  }

  // (6) strictness.
  {
    const Rational cross = flip_gradient(spec, a, 1, 2), within = flip_gradient(spec, a, 1, 1);
    auto& c = rep.add("flip_gradients", cross == ratio(150, 512) && within == ratio(84, 512),
                      "cross-part 150/512 and within-part 84/512");
    c.values.push_back({"cross", to_string(cross)});
    c.values.push_back({"within", to_string(within)});
    bool table = true, unique7 = true;
    auto& t = rep.add("attachment_table", true, "lambda(a,(b,1)) = (4!/8^4) C(k,3)(19/2 - k) for |supp b| = k");
    for (int k = 0; k <= 8; ++k) {
      const unsigned long mask = (1ul << k) - 1;
      const Rational v = attach_value(spec, a, pattern_from_mask(a, mask, 1));
      const Rational formula = ratio(24, 4096) * Rational(binomial(k, 3)) * (Rational(19, 2) - k);
      if (v != formula) table = false;
      if (k != 7 && v >= lambda0) unique7 = false;
      if (k == 7 && v != lambda0) unique7 = false;
      t.values.push_back({"k=" + std::to_string(k), to_string(v)});
    }
    t.pass = table;
    rep.add("attachment_unique_max_k7", unique7, "unique maximum 525/1024 at k = 7");
    const Rational res = lagrange_residual(spec, a);
    rep.add("lagrange_residual_zero", res == 0).values.push_back({"residual", to_string(res)});
    const StrictnessReport sr = strictness_certificate(spec, {a});
    auto& s = rep.add("strictness", sr.pass, "(Str1) and (Str2) with c > 0");
    s.values.push_back({"c1", to_string(sr.c1)});
    s.values.push_back({"c2", to_string(sr.c2)});
    s.values.push_back({"c", to_string(sr.c)});
  }

  // (7) the value itself.
  {
    const Rational v = lambda_of_vector(spec, a), w = density_formula({2, 1, 1, 1}, a);
    rep.add("lambda_value", v == lambda0 && w == lambda0, "lambda((1/8)^8) = 525/1024 by enumeration and closed form");
  }
  rep.lambda_max = to_string(lambda0);
  rep.maximiser = partite_vector_to_json(a);
  rep.finalise();
  return rep;
}

}  // namespace symstab
