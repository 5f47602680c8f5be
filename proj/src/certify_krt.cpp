#include <functional>
#include <optional>
#include <stdexcept>

#include "symstab/certificates.hpp"
#include "symstab/density.hpp"
#include "symstab/opt_search.hpp"
#include "symstab/perturbation.hpp"
#include "symstab/strictness.hpp"

namespace symstab {

namespace {

// Non-increasing positive integer tuples with at most max_parts entries and sum ≤ total.
void tuples(int total, int max_parts, int cap, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& visit) {
  if (!cur.empty()) visit(cur);
  if (static_cast<int>(cur.size()) == max_parts) return;
  for (int v = std::min(cap, total); v >= 1; --v) {
    cur.push_back(v);
    tuples(total - v, max_parts, v, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

CertificateReport certify_krt(int r, int t) {
  if (r < 2 || t < 2 || r * t > 12) throw std::invalid_argument("certify_krt: need r, t >= 2 and rt <= 12");
  CertificateReport rep;
  rep.certificate = "krt";
  rep.parameters = {{"r", std::to_string(r)}, {"t", std::to_string(t)}};
  const Partition shape(static_cast<std::size_t>(r), t);
  std::optional<ObjectiveSpec> spec;
  if (r * t <= kMaxCanonicalOrder) spec = ObjectiveSpec::complete_partite(shape);
  const PartiteVector x = PartiteVector::uniform(r);

  // e^{t−1} > r via partial sums of the exponential series.
  {
    Rational lower(0), term(1);
    for (int j = 0; j < 20; ++j) {
      lower += term;
      term *= Rational(t - 1) / (j + 1);
    }
    // term is now (t−1)^20/20!; the tail is at most term/(1 − (t−1)/21).
    const Rational upper = lower + term / (1 - ratio(t - 1, 21));
    rep.hypothesis_holds = lower > r;
    auto& c = rep.info("hypothesis", rep.hypothesis_holds, "t > 1 + log r");
    c.values.push_back({"exp(t-1)_lower", to_string(lower)});
    c.values.push_back({"exp(t-1)_upper", to_string(upper)});
    if (!rep.hypothesis_holds && upper > r) rep.notes.push_back("hypothesis undecided by the series bounds");
  }

  const Rational lam = density_formula(shape, x);
  const Integer num = factorial(static_cast<long>(r) * t);
  Integer den = 1;
  for (int i = 0; i < r; ++i) den *= factorial(t);
  const Rational formula = Rational(num) / (Rational(den) * pow(Rational(r), static_cast<unsigned>(r * t)));
  {
    auto& c = rep.add("value", lam == formula && (!spec || lambda_closed_form(*spec, x) == lam),
                      "lambda((1/r,...,1/r)) = (rt)!/(t!^r r^(rt))");
    c.values.push_back({"lambda", to_string(lam)});
    const Rational stated = formula / Rational(factorial(r));
    auto& s = rep.info("stated_formula", stated == lam, "(rt)!/(r! t!^r r^(rt)) differs from lambda by r!");
    s.values.push_back({"stated", to_string(stated)});
  }
  if (r == 2) {
    const UPoly f = kst_f(t, t);
    rep.add("two_part_consistency", lam == Rational(binomial(2 * t, t)) * f(Rational(1, 2)) / 2, "lambda = C(2t,t) M_{t,t}");
  }
  // Exact comparison on a rational grid.
  {
    int compared = 0;
    bool unique = true;
    std::string witness;
    for (int D = 1; D <= 3 * r; ++D) {
      std::vector<int> cur;
      tuples(D, r + 2, D, cur, [&](const std::vector<int>& a) {
        std::vector<Rational> parts;
        for (int v : a) parts.push_back(ratio(v, D));
        const PartiteVector y(parts);
        if (y == x) return;
        ++compared;
        if (density_formula(shape, y) >= lam) {
          unique = false;
          if (witness.empty()) witness = y.to_string();
        }
      });
    }
    auto& c = rep.add("uniqueness_grid", unique, "every other grid vector (denominator <= 3r, <= r+2 parts) is strictly smaller");
    c.values.push_back({"compared", std::to_string(compared)});
    if (!witness.empty()) c.values.push_back({"witness", witness});
  }

  if (spec) {
    rep.add("lagrange_residual_zero", lagrange_residual(*spec, x) == 0);

    {
      const Str1Result s1 = check_str1(*spec, x);
      auto& c = rep.add("str1", s1.minimum > 0, "flip gradients positive");
      c.values.push_back({"min", to_string(s1.minimum)});
      bool equal = true;
      for (const auto& e : s1.flips) equal = equal && e.value == lam;
      rep.info("str1_equals_lambda", equal, "every flip gradient equals lambda");
    }
    {
      bool ok = true;
      for (unsigned long mask = 0; mask < (1UL << r); ++mask) {
        if (__builtin_popcountl(mask) == r - 1) continue;  // clones
        ok = ok && vertex_gradient(*spec, x, pattern_from_mask(x, mask, 1)) == lam;
      }
      rep.add("non_clone_gradients", ok, "vertex gradient equals lambda for every non-clone pattern");
    }
    const StrictnessReport sr = strictness_certificate(*spec, {x});
    {
      auto& c = rep.add("strictness", sr.pass);
      c.values.push_back({"c1", to_string(sr.c1)});
      c.values.push_back({"c2", to_string(sr.c2)});
    }
  } else {
    rep.info("strictness_checks", false, "gradient checks need an objective on at most 8 vertices");
    rep.hypothesis_holds = false;
    rep.notes.push_back("stationarity and strictness not checked for rt > 8");
  }
  rep.lambda_max = to_string(lam);
  rep.maximiser = partite_vector_to_json(x);
  if (!rep.hypothesis_holds)
    rep.notes.push_back("optimality of the equal split is not certified outside the hypothesis range");
  rep.finalise();
  return rep;
}

}  // namespace symstab
