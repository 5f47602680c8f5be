#include <algorithm>
#include <optional>
#include <stdexcept>

#include "symstab/certificates.hpp"
#include "symstab/density.hpp"
#include "symstab/interval.hpp"
#include "symstab/opt_search.hpp"
#include "symstab/perturbation.hpp"
#include "symstab/strictness.hpp"

namespace symstab {

namespace {

Interval enclose(const UPoly& p, const Interval& x) {
  Interval acc(Rational(0));
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + Interval(p.coeff(i));
  return acc;
}

// Open-interval Sturm count on (lo, hi).
int roots_open(const UPoly& p, const Rational& lo, const Rational& hi) {
  return sturm_root_count(p, lo, hi) - (p(hi) == 0 ? 1 : 0);
}

PartiteVector two_parts(const Rational& alpha) { return PartiteVector::from_unsorted({alpha, 1 - alpha}); }

// A function of x = (α, 1−α), α ≥ 1/2, interpolated as a polynomial in α.
template <class F>
UPoly in_alpha(int degree, F&& f) {
  std::vector<Rational> xs, ys;
  for (int j = 0; j <= degree + 1; ++j) {
    const Rational a = Rational(1, 2) + ratio(j, 4 * (degree + 2));
    xs.push_back(a);
    ys.push_back(f(two_parts(a)));
  }
  return interpolate(xs, ys);
}

}  // namespace

CertificateReport certify_kst(int s, int t) {
  if (s > t) std::swap(s, t);
  if (s < 1 || s * t < 2 || s + t > 12) throw std::invalid_argument("certify_kst: need st >= 2 and s + t <= 12");
  CertificateReport rep;
  rep.certificate = "kst";
  rep.parameters = {{"s", std::to_string(s)}, {"t", std::to_string(t)}};
  const int k = s + t;
  const Partition shape{t, s};
  // The objective table (needed for gradients) exists only up to 8 vertices.
  std::optional<ObjectiveSpec> spec;
  if (k <= kMaxCanonicalOrder) spec = ObjectiveSpec::complete_partite(shape);
  const KstResult kst = kst_maximiser(s, t);
  const UPoly A = UPoly::variable(), B = UPoly(1) - A;
  const UPoly f = kst_f(s, t), h = kst_h(s, t);
  const bool rational = kst.alpha.is_rational();
  const Interval alpha = rational ? Interval(*kst.alpha.rational()) : Interval(kst.alpha.lo(), kst.alpha.hi());
  const Interval beta = Interval(Rational(1)) - alpha;

  // f′(α) = α^{s−1}(1−α)^{s−1} · α^{t−s+1} h((1−α)/α).
  {
    UPoly homog;
    for (int i = 0; i <= h.degree(); ++i)
      homog += UPoly(h.coeff(i)) * B.pow(static_cast<unsigned>(i)) * A.pow(static_cast<unsigned>(t - s + 1 - i));
    const UPoly rhs = A.pow(static_cast<unsigned>(s - 1)) * B.pow(static_cast<unsigned>(s - 1)) * homog;
    rep.add("derivative_via_h", f.derivative() == rhs, "f'(a) = a^t (1-a)^(s-1) h((1-a)/a)");
  }
  const UPoly df = f.derivative();
  const Rational half(1, 2);
  if (kst.half) {
    // Property (i): h > 0 beyond 1, so f decreases on (1/2, 1].
    const Rational bound = root_bound(h) + 1;
    const bool h_pos = roots_open(h, 1, bound) + (h(bound) == 0 ? 1 : 0) == 0 && h(2) > 0;
    rep.add("property_i_h_positive", h_pos, "h(x) > 0 for x > 1");
    const bool decreasing = roots_open(df, half, 1) == 0 && df(Rational(3, 4)) < 0 && f(half) > f(1);
    rep.add("property_i_unique_half", decreasing, "unique maximum of f on [1/2,1] at 1/2");
  } else {
    const UPoly h2 = h.derivative().derivative();
    const bool shape = h(0) < 0 && h(1) == 0 && h.derivative()(1) < 0 && roots_open(h2, 0, 1) == 0 && h2(half) < 0;
    rep.add("property_ii_h_shape", shape, "h(0) < 0, h(1) = 0, h'(1) < 0, h'' < 0 on (0,1)");
    rep.add("property_ii_single_root", kst.x_root.has_value(), "h has a single root in (0,1)");
    // f on [1/2,1]: exactly one interior critical point, strictly above both endpoints.
    const Interval fa = enclose(f, alpha);
    const bool unique = roots_open(df, half, 1) == 1 && fa.lo > f(half) && fa.lo > f(1);
    auto& c = rep.add("property_ii_unique_max", unique, "the root of h gives the unique maximum of f on [1/2,1]");
    c.values.push_back({"alpha", kst.alpha.to_string()});
  }
  Rational single_value;
  bool single_ok = true;
  if (s == 1) {
    const Rational bound = ratio(1, t + 1);
    const bool iii = (Interval(Rational(1)) - alpha).lo > bound && df(bound) > 0;
    auto& c = rep.add("property_iii", iii, "1 - alpha > 1/(t+1), and f'(1/(t+1)) > 0");
    c.values.push_back({"1-alpha_lower", to_string((Interval(Rational(1)) - alpha).lo)});
    // A single part with clique mass stays below the two-part maximum.
    const Rational y = ratio(t, t + 1);
    single_value = density_formula(shape, PartiteVector({y}));
    single_ok = single_value == pow(y, static_cast<unsigned>(t));
  }
  {
    // Property (iv).
    const UPoly g = UPoly(t + 1) * A.pow(static_cast<unsigned>(t)) * B;
    const UPoly dg = UPoly(t + 1) * A.pow(static_cast<unsigned>(t - 1)) * (UPoly(t) - UPoly(t + 1) * A);
    const Rational m = ratio(t, t + 1);
    rep.add("property_iv", g.derivative() == dg && g(m) == pow(m, static_cast<unsigned>(t)),
            "max of (t+1)a^t(1-a) is (t/(t+1))^t at t/(t+1)");
  }

  // λ along the segment x = (α, 1−α).
  const UPoly lam = in_alpha(k, [&](const PartiteVector& x) { return density_formula(shape, x); });
  Rational factor(binomial(k, s));
  if (s == t) factor /= 2;
  rep.add("lambda_along_segment", lam == UPoly(factor) * f, "lambda((a,1-a)) = C(s+t,s) f(a), halved when s = t");
  Interval value = enclose(lam, alpha);
  // α maximises λ on the segment, so any point of its isolating interval bounds it below.
  value.lo = std::max({value.lo, lam(alpha.lo), lam(alpha.hi)});

  if (spec) {
    // Strictness from polynomials in α evaluated on the isolating interval.
    Rational c_lower;
    bool have_c = false;
    auto take = [&](const Rational& v) {
      if (!have_c || v < c_lower) c_lower = v;
      have_c = true;
    };
    {
      auto& c = rep.add("str1", true, "every flip gradient at the maximiser is positive");
      const Interval rough = enclose(UPoly::from_coeffs({1, -1}).pow(static_cast<unsigned>(k - 2)), alpha);
      bool rough_ok = true;
      for (int i1 = 1; i1 <= 2; ++i1)
        for (int i2 = i1; i2 <= 2; ++i2) {
          const UPoly g = in_alpha(k, [&](const PartiteVector& x) { return flip_gradient(*spec, x, i1, i2); });
          const Interval gi = enclose(g, alpha);
          if (gi.lo <= 0) c.pass = false;
          if (gi.lo < rough.hi) rough_ok = false;
          take(gi.lo);
          c.values.push_back({std::to_string(i1) + "," + std::to_string(i2), gi.lo == gi.hi ? to_string(gi.lo) : gi.to_string()});
        }
      rep.add("str1_rough_bound", rough_ok, "flip gradients at least beta^(s+t-2)");
    }
    {
      const UPoly& minpoly = kst.alpha.polynomial();
      auto& c = rep.add("str2", true, "vertex gradients: zero exactly for clones, positive margin otherwise");
      for (unsigned long mask = 0; mask < 4; ++mask) {
        const UPoly att = in_alpha(k, [&](const PartiteVector& x) { return attach_value(*spec, x, pattern_from_mask(x, mask, 1)); });
        const UPoly grad = lam - att;
        const bool clone = mask == 1 || mask == 2;
        if (clone) {
          const bool zero = rational ? grad(*kst.alpha.rational()) == 0 : divmod(grad, minpoly).second.is_zero();
          if (!zero) c.pass = false;
          c.values.push_back({"mask=" + std::to_string(mask), "0"});
          continue;
        }
        // min_i w_i = β for b ∈ {00, 11}.
        const Interval gi = enclose(grad, alpha);
        if (gi.lo <= 0) c.pass = false;
        take(gi.lo / beta.hi);
        c.values.push_back({"mask=" + std::to_string(mask), gi.lo == gi.hi ? to_string(gi.lo) : gi.to_string()});
      }
      if (s == 1) {
        // 2∇•_{11} = α^{t−1}((t+1)β − 1) + β^{t−1}((t+1)α − 1), from (∂1 + ∂2)/k − 2λ(x,(11,1)).
        const UPoly d1 = in_alpha(k, [&](const PartiteVector& x) { return partial_derivative(*spec, x, 1); });
        const UPoly d2 = in_alpha(k, [&](const PartiteVector& x) { return partial_derivative(*spec, x, 2); });
        const UPoly att = in_alpha(k, [&](const PartiteVector& x) { return attach_value(*spec, x, pattern_from_mask(x, 3, 1)); });
        const UPoly rhs = A.pow(static_cast<unsigned>(t - 1)) * (UPoly(t + 1) * B - UPoly(1)) +
                          B.pow(static_cast<unsigned>(t - 1)) * (UPoly(t + 1) * A - UPoly(1));
        rep.add("str2_display_identity", UPoly(ratio(1, k)) * (d1 + d2) - UPoly(2) * att == rhs,
                "(d1 + d2)/k - 2 lambda(x,(11,1)) = a^(t-1)((t+1)b-1) + b^(t-1)((t+1)a-1)");
      }
    }
    auto& cc = rep.add("strictness_constant", have_c && c_lower > 0, "certified lower bound on the strictness constant");
    cc.values.push_back({"c_lower", to_string(c_lower)});
    if (rational) {
      const StrictnessReport sr = strictness_certificate(*spec, {two_parts(*kst.alpha.rational())});
      auto& c = rep.add("strictness_exact", sr.pass, "exact (Str1)/(Str2) search at the rational maximiser");
      c.values.push_back({"c", to_string(sr.c)});
      const Rational res = lagrange_residual(*spec, two_parts(*kst.alpha.rational()));
      rep.add("lagrange_residual_zero", res == 0);
    }
  } else {
    rep.info("strictness_checks", false, "gradient checks need an objective on at most 8 vertices");
    rep.hypothesis_holds = false;
    rep.notes.push_back("strictness not checked for s + t > 8");
  }

  if (s == 1) {
    auto& c = rep.add("single_part_excluded", single_ok && single_value < value.lo,
                      "lambda((t/(t+1))) = (t/(t+1))^t is below the two-part maximum");
    c.values.push_back({"single", to_string(single_value)});
  }
  Interval induc = kst.inducibility;
  rep.add("inducibility_consistent", value.lo <= induc.hi && induc.lo <= value.hi,
          "C(s+t,s) M_{s,t} matches lambda at the maximiser");
  if (rational) {
    rep.lambda_max = to_string(value.lo);
    rep.maximiser = partite_vector_to_json(two_parts(*kst.alpha.rational()));
  } else {
    rep.lambda_max = value.to_string();
    rep.maximiser = "x = (alpha, 1 - alpha), alpha = " + kst.alpha.to_string();
  }
  if (s == 1 && t == 4)
    rep.notes.push_back("alpha = (3+sqrt(3))/6 from the root x = 2 - sqrt(3) of h; the value 4/5 does not satisfy property (iii)");
  rep.parameters.push_back({"alpha_approx", std::to_string(kst.alpha.to_double())});
  rep.finalise();
  return rep;
}

}  // namespace symstab
