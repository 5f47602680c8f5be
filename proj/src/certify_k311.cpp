#include <algorithm>

#include "symstab/branch_bound.hpp"
#include "symstab/certificates.hpp"
#include "symstab/density.hpp"
#include "symstab/lp.hpp"
#include "symstab/matrix.hpp"
#include "symstab/multivariate.hpp"
#include "symstab/perturbation.hpp"
#include "symstab/strictness.hpp"

namespace symstab {

namespace {

const std::vector<std::string> kYZ{"y", "z"};

MPoly h_displayed() {
  const MPoly y = MPoly::variable(kYZ, "y"), z = MPoly::variable(kYZ, "z");
  auto c = [](long v) { return Rational(v); };
  return c(2) * y.pow(3) - c(2) * y.pow(4) - c(2) * y.pow(3) * z + c(5) * z.pow(2) - c(2) * y * z.pow(2) -
         c(3) * y.pow(2) * z.pow(2) - c(12) * z.pow(3) + c(4) * y * z.pow(3) + c(7) * z.pow(4) - Rational(108, 625);
}

// 12(z²/4((1−z)² − y²) + y³/6 (1−y−z) + (1/3)(1−y−z) f(1−z) − 9/625), f(x) = (1−x)²(x−z)/2.
MPoly h_defined() {
  const MPoly y = MPoly::variable(kYZ, "y"), z = MPoly::variable(kYZ, "z");
  const MPoly one = MPoly::constant(kYZ, 1);
  const MPoly x = one - z;
  const MPoly f = Rational(1, 2) * (one - x).pow(2) * (x - z);
  const MPoly s = one - y - z;
  return Rational(12) * (Rational(1, 4) * z.pow(2) * ((one - z).pow(2) - y.pow(2)) + Rational(1, 6) * y.pow(3) * s +
                         Rational(1, 3) * s * f - MPoly::constant(kYZ, Rational(9, 625)));
}

std::string approx(const Rational& q) { return std::to_string(q.get_d()); }

}  // namespace

CertificateReport certify_k311() {
  CertificateReport rep;
  rep.certificate = "k311";
  const Rational lambda0(216, 625);
  const Rational unit(1, 375000);  // 1/(600·625)
  const ObjectiveSpec spec = ObjectiveSpec::complete_partite({3, 1, 1});
  const PartiteVector a({Rational(3, 5)});
  const UPoly S = UPoly::variable();

  // (1) excluding z ≥ 2/5.
  Rational bound_total = 0;
  {
    // Copies with ≥ 3 vertices in S, after yz ≤ ((1−s)/2)².
    const UPoly g1 = S.pow(5) * UPoly(Rational(1, 120)) + S.pow(4) * (UPoly(1) - S) * UPoly(Rational(1, 24)) +
                     S.pow(3) * (UPoly(1) - S).pow(2) * UPoly(Rational(1, 24));
    const UPoly g1_relaxed = S.pow(5) * UPoly(Rational(1, 120)) + S.pow(4) * UPoly(Rational(1, 24)) +
                             S.pow(3) * UPoly(Rational(1, 24));
    const bool relax_ok = nonnegative_on(g1_relaxed - g1, 0, Rational(1, 5));
    const bool endpoint = g1_relaxed(Rational(1, 5)) == 151 * unit;
    const bool monotone = nonnegative_on(g1_relaxed.derivative(), 0, Rational(1, 5));
    const BBResult bb = bb_max_bound(g1, 0, Rational(1, 5));
    auto& c = rep.add("three_in_S_bound", relax_ok && endpoint && monotone && bb.converged && bb.upper <= 151 * unit + Rational(1, 1000000),
                      "s^5/5! + s^4/4! + s^3/4! <= 151/(600*625) on [0,1/5]");
    c.values.push_back({"bb_upper", to_string(bb.upper)});
    bound_total += bb.upper;
  }
  {
    // r(s) = s²/12((3/5 − s)³ + (2/5)³), r′ = s t(s)/300.
    const UPoly r = S.pow(2) * UPoly(Rational(1, 12)) *
                    ((UPoly(Rational(3, 5)) - S).pow(3) + UPoly(pow(Rational(2, 5), 3)));
    const UPoly t = UPoly::from_coeffs({14, -81, 180, -125});
    rep.add("r_derivative_identity", r.derivative() == S * t * UPoly(Rational(1, 300)), "r'(s) = s t(s)/300");
    rep.add("t_sign_change", t(1) < 0 && t(Rational(4, 5)) > 0, "t(1) < 0 < t(4/5)");
    const UPoly tp = UPoly(-3) * (UPoly(5) * S - UPoly(3)) * (UPoly(25) * S - UPoly(9));
    rep.add("t_prime_factorisation", t.derivative() == tp, "t'(s) = -3(5s-3)(25s-9)");
    auto& c = rep.add("t_at_9_25", Rational(9, 25) > Rational(1, 5) && t(Rational(9, 25)) >= 0,
                      "smallest root 9/25 of t' exceeds 1/5 and t(9/25) >= 0");
    c.values.push_back({"t(9/25)", to_string(t(Rational(9, 25)))});
    rep.add("t_no_root_small_s", sturm_root_count(t, 0, Rational(1, 5)) == 0, "t has no root in (0,1/5] (Sturm)");
    rep.add("r_endpoint", r(Rational(1, 5)) == 160 * unit, "r(1/5) = 160/(600*625)");
    const BBResult bb = bb_max_bound(r, 0, Rational(1, 5));
    auto& b = rep.add("two_in_S_bound", bb.converged && bb.upper <= 160 * unit + Rational(1, 1000000), "max r on [0,1/5] via branch-and-bound");
    b.values.push_back({"bb_upper", to_string(bb.upper)});
    bound_total += bb.upper;
  }
  {
    // (1/6)(t³(1−t) + (1−t)³t) s(1−s)⁴ over s ∈ [0,1/5], t ∈ [0,1].
    const std::vector<std::string> st{"s", "t"};
    const MPoly s = MPoly::variable(st, "s"), t = MPoly::variable(st, "t");
    const MPoly one = MPoly::constant(st, 1);
    const MPoly g = Rational(1, 6) * (t.pow(3) * (one - t) + (one - t).pow(3) * t) * s * (one - s).pow(4);
    const Rational at = g.evaluate(std::vector<Rational>{Rational(1, 5), Rational(1, 2)});
    const BBResult bb = bb_max_bound(g, {Interval(0, Rational(1, 5)), Interval(0, 1)});
    auto& c = rep.add("four_in_YZ_bound", at == 640 * unit && bb.converged && bb.upper <= 640 * unit + Rational(1, 1000000),
                      "maximum 640/(600*625) at (s,t) = (1/5,1/2)");
    c.values.push_back({"bb_upper", to_string(bb.upper)});
    bound_total += bb.upper;
  }
  {
    const Rational exact_total = 120 * (151 + 160 + 640) * unit;
    auto& c = rep.add("z_large_excluded", exact_total < lambda0 && 120 * bound_total < lambda0,
                      "5!(151+160+640)/(600*625) < 216/625, also with certified upper bounds");
    c.values.push_back({"exact", to_string(exact_total)});
    c.values.push_back({"certified", approx(120 * bound_total)});
  }

  // (2) the claim h ≥ 0 ⇒ y ≥ 3/5.
  const MPoly h = h_displayed();
  rep.add("h_expansion", h == h_defined(), "displayed expansion of h(y,z) equals its defining expression");
  const std::string dir = data_directory() + "/k311/";
  const Rational alpha(272, 1000);
  {
    const RationalMatrix R0 = RationalMatrix::read_file(dir + "r0.txt");
    const RationalMatrix Q1 = RationalMatrix::read_file(dir + "q1.txt");
    const RationalMatrix Q2 = RationalMatrix::read_file(dir + "q2.txt");
    const RationalMatrix Q3 = RationalMatrix::read_file(dir + "q3.txt");
    rep.add("psd_R0", psd_check(R0), "leading principal minors positive");
    rep.add("psd_Q1", psd_check(Q1), "leading principal minors positive");
    rep.add("psd_Q2", psd_check(Q2), "leading principal minors positive");
    rep.add("psd_Q3", psd_check(Q3), "leading principal minors positive");
    const MPoly y = MPoly::variable(kYZ, "y"), z = MPoly::variable(kYZ, "z");
    const MPoly one = MPoly::constant(kYZ, 1);
    const std::vector<MPoly> xbar{one, y, z, y.pow(2), y * z, z.pow(2)};
    const MPoly eps = -h - z * quadratic_form(Q1, xbar) - (y - z) * quadratic_form(Q2, xbar) -
                      (MPoly::constant(kYZ, alpha) - y) * quadratic_form(Q3, xbar) - quadratic_form(R0, xbar);
    Rational others = 0;
    for (auto& [e, c] : eps.terms())
      if (e != MPoly::Exponents{0, 0, 0}) others += abs(c);
    const Rational lower = eps.constant_term() - others;
    auto& c = rep.add("epsilon_lower_bound", lower >= Rational(1, 50),
                      "constant term minus sum of |other coefficients| of epsilon(y,z) >= 1/50");
    c.values.push_back({"bound", to_string(lower)});
    c.values.push_back({"bound_approx", approx(lower)});
  }
  {
    const UPoly q = read_polynomial_file(dir + "q.txt");
    const UPoly r1 = read_polynomial_file(dir + "r1.txt");
    const UPoly res = resultant(h, h.derivative("z"), "z").to_univariate("y");
    auto& c = rep.add("eliminant_divisible_by_q", q.degree() == 12 && divides(q, res),
                      "Res_z(h, dh/dz) is divisible by the degree-12 q(y)");
    c.values.push_back({"resultant_degree", std::to_string(res.degree())});
    const UPoly p = q.shift(alpha);
    const UPoly prod = p * r1;
    bool positive = r1.degree() == 16 && prod.degree() == 28;
    for (auto& co : r1.coeffs()) positive = positive && co > 0;
    for (auto& co : prod.coeffs()) positive = positive && co > 0;
    auto& d = rep.add("p_times_r1_positive", positive, "p(y) = q(y + 272/1000); p(y) r1(y) has positive coefficients");
    d.values.push_back({"min_coefficient", approx(*std::min_element(prod.coeffs().begin(), prod.coeffs().end()))});
    rep.add("q_no_root_above_alpha", sturm_root_count(q, alpha, 1) == 0, "independent Sturm check: q has no root in (272/1000, 1]");
    const MultiplierResult lp = positive_multiplier_lp(p, 16);
    auto& e = rep.info("lp_multiplier_search", lp.r1.has_value(), "floating LP then exact verification, degree <= 16");
    if (lp.r1) e.values.push_back({"degree", std::to_string(lp.degree)});
  }
  {
    const UPoly Y = UPoly::variable();
    const UPoly hyy = h.substitute("z", MPoly::variable(kYZ, "y")).to_univariate("y");
    const UPoly expect = Y.pow(2) * (UPoly(2) * Y - UPoly(1)) * (UPoly(2) * Y - UPoly(5)) - UPoly(Rational(108, 625));
    rep.add("boundary_diagonal", hyy == expect && positive_on(-hyy, 0, 1), "h(y,y) = y^2(2y-1)(2y-5) - 108/625 < 0 on [0,1]");
    const UPoly hy0 = h.substitute("z", Rational(0)).to_univariate("y");
    const UPoly expect0 = UPoly(2) * Y.pow(3) * (UPoly(1) - Y) - UPoly(Rational(108, 625));
    const bool sign = hy0(0) < 0 && hy0(Rational(3, 5)) == 0 && sturm_root_count(hy0, 0, Rational(3, 5)) == 1;
    auto& c = rep.add("boundary_z0", hy0 == expect0 && sign, "h(y,0) = 2y^3(1-y) - 108/625 < 0 on [0,3/5), zero at 3/5");
    c.values.push_back({"h(y,0)", hy0.to_string("y")});
    const Rational ymax = Rational(3, 5) - Rational(1, 1000);
    BBOptions opt;
    const MPoly y = MPoly::variable(kYZ, "y"), z = MPoly::variable(kYZ, "z");
    opt.constraints = {z - y, y + z - Rational(1)};
    const BBResult bb = bb_max_bound(h, {Interval(0, ymax), Interval(0, ymax)}, opt);
    auto& b = rep.add("bb_h_negative", bb.converged && bb.upper < 0, "h < 0 on R with y <= 3/5 - 1/1000 (tol 1e-6)");
    b.values.push_back({"upper", to_string(bb.upper)});
    b.values.push_back({"upper_approx", approx(bb.upper)});
    b.values.push_back({"boxes", std::to_string(bb.boxes)});
  }

  // (3) replacing Z by a clique.
  {
    const UPoly Z = UPoly::variable();
    const UPoly lhs = Z.pow(2) * UPoly(Rational(1, 2)) *
                      (Z * (UPoly(1) - Z).pow(2) * UPoly(Rational(1, 6)) - UPoly(ratio(27, 750)));
    const UPoly rhs = Z.pow(2) * UPoly(Rational(-229, 40500));
    const bool ok = nonnegative_on(rhs - lhs, 0, Rational(2, 5));
    const bool constant = Rational(1, 2) * (ratio(4, 162) - ratio(27, 750)) == Rational(-229, 40500);
    rep.add("clique_replacement", ok && constant, "z^2/2 (z(1-z)^2/6 - 27/750) <= -229/40500 z^2 on [0,2/5]");
  }

  // (4) one-dimensional maximisation of 10y³(1−y)².
  {
    const UPoly Y = UPoly::variable();
    const UPoly g = UPoly(10) * Y.pow(3) * (UPoly(1) - Y).pow(2);
    const UPoly dg = g.derivative();
    const bool factor = dg == UPoly(10) * Y.pow(2) * (UPoly(1) - Y) * (UPoly(3) - UPoly(5) * Y);
    const bool single = sturm_root_count(dg, 0, Rational(99, 100)) == 1 && dg(Rational(3, 5)) == 0 &&
                        dg(Rational(1, 2)) > 0 && dg(Rational(7, 10)) < 0;
    auto& c = rep.add("final_maximisation", factor && single && g(Rational(3, 5)) == lambda0,
                      "10y^3(1-y)^2 has its unique interior critical point at 3/5, value 216/625");
    c.values.push_back({"value", to_string(g(Rational(3, 5)))});
  }

  // (5) strictness.
  {
    const Str1Result s1 = check_str1(spec, a);
    auto& c1 = rep.add("str1_positive", s1.minimum > 0, "every flip at the extremal structure has positive gradient");
    for (auto& f : s1.flips) c1.values.push_back({std::to_string(f.i1) + "," + std::to_string(f.i2), to_string(f.value)});
    const UPoly alpha_var = UPoly::variable();
    const UPoly joined = attach_polynomial(spec, a, {false, true});
    const UPoly apart = attach_polynomial(spec, a, {false, false});
    rep.add("attach_joined", joined == UPoly(lambda0) * alpha_var, "lambda(a,(b,alpha)) = lambda_max * alpha when b(1) = 1");
    rep.add("attach_apart", apart == UPoly(lambda0) * alpha_var.pow(2), "lambda(a,(b,alpha)) = lambda_max * alpha^2 when b(1) = 0");
    const UPoly cap = UPoly(lambda0) * alpha_var;
    rep.add("attach_below_alpha", nonnegative_on(cap - joined, 0, 1) && nonnegative_on(cap - apart, 0, 1),
            "lambda(a,(b,alpha)) <= lambda_max * alpha on [0,1] for both b");
    const Rational c(108, 125);
    rep.add("stated_constant", c * Rational(2, 5) == lambda0, "c x0 = (108/125)(2/5) = lambda_max");
    const StrictnessReport sr = strictness_certificate(spec, {a});
    auto& s = rep.add("strictness", sr.pass && sr.c2 >= c, "(Str2) constant at least 108/125");
    s.values.push_back({"c1", to_string(sr.c1)});
    s.values.push_back({"c2", to_string(sr.c2)});
    const Rational res = lagrange_residual(spec, a);
    rep.add("lagrange_residual_zero", res == 0).values.push_back({"residual", to_string(res)});
  }

  // (6) the value.
  {
    const Rational v = lambda_of_vector(spec, a), w = density_formula({3, 1, 1}, a);
    rep.add("lambda_value", v == lambda0 && w == lambda0, "lambda(x0 = 2/5, x1 = 3/5) = 216/625");
  }
  rep.notes.push_back("h(y,0) is certified in its expanded form 2y^3(1-y) - 108/625");
  rep.lambda_max = to_string(lambda0);
  rep.maximiser = partite_vector_to_json(a);
  rep.finalise();
  return rep;
}

}  // namespace symstab
