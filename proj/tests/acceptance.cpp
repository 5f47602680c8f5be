// One PASS/FAIL line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "symstab/certificates.hpp"
#include "symstab/density.hpp"
#include "symstab/edit_distance.hpp"
#include "symstab/finite_partite.hpp"
#include "symstab/opt_search.hpp"
#include "symstab/perturbation.hpp"
#include "symstab/strictness.hpp"
#include "symstab/symmetrise.hpp"

using namespace symstab;

namespace {

struct Result {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what;
      pass = false;
    }
  }
};

std::mt19937_64 rng(20240611);

int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Random vector with common denominator ≤ max_den and at most max_parts parts.
PartiteVector random_vector(int max_parts, int max_den, int& den) {
  den = uniform_int(1, max_den);
  const int parts = uniform_int(0, max_parts);
  int left = den;
  std::vector<Rational> xs;
  for (int i = 0; i < parts && left > 0; ++i) {
    const int a = uniform_int(0, left);
    if (a > 0) xs.push_back(ratio(a, den));
    left -= a;
  }
  return PartiteVector::from_unsorted(xs);
}

PartiteVector equal_parts(int r) { return PartiteVector::uniform(r); }

PartiteVector k311_vector() { return PartiteVector({Rational(3, 5)}); }

ObjectiveSpec kp(const Partition& a) { return ObjectiveSpec::complete_partite(a); }

// Homogeneous extension Λ(w) = s^k λ(w/s), s = Σ w, w = (w0, w1, ...).
Rational homogeneous_lambda(const ObjectiveSpec& spec, const std::vector<Rational>& w) {
  Rational s(0);
  for (auto& v : w) s += v;
  std::vector<Rational> parts;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] != 0) parts.push_back(w[i] / s);
  return pow(s, static_cast<unsigned>(spec.k())) * lambda_of_vector(spec, PartiteVector::from_unsorted(parts));
}

// ∂Λ/∂w_i at w by exact interpolation of t ↦ Λ(w + t e_i).
Rational numeric_free_partial(const ObjectiveSpec& spec, const PartiteVector& x, int i) {
  std::vector<Rational> w = x.weights();
  std::vector<Rational> ts, vs;
  for (int j = 0; j <= spec.k(); ++j) {
    const Rational t = ratio(j + 1, 97);
    std::vector<Rational> shifted = w;
    shifted[static_cast<std::size_t>(i)] += t;
    ts.push_back(t);
    vs.push_back(homogeneous_lambda(spec, shifted));
  }
  return interpolate(ts, vs).derivative()(0);
}

Result criterion1() {
  Result r;
  const PartiteVector eighths = equal_parts(8);
  const Rational a = lambda_of_vector(kp({2, 1, 1, 1}), eighths);
  const Rational b = density_formula({2, 1, 1, 1}, eighths);
  const Rational c = lambda_of_vector(kp({3, 1, 1}), k311_vector());
  const Rational d = density_formula({3, 1, 1}, k311_vector());
  r.expect(a == ratio(525, 1024) && b == ratio(525, 1024), "K2111 value");
  r.expect(c == ratio(216, 625) && d == ratio(216, 625), "K311 value");
  r.detail << "K2111 " << to_string(a) << "/" << to_string(b) << ", K311 " << to_string(c) << "/" << to_string(d);
  return r;
}

Result criterion2() {
  Result r;
  int shapes = 0, vectors = 0;
  Rational worst(0);
  for (int k = 3; k <= 5; ++k)
    for (const Partition& a : partitions_of(k)) {
      ++shapes;
      const ObjectiveSpec spec = kp(a);
      for (int rep = 0; rep < 200; ++rep) {
        int den = 1;
        const PartiteVector x = random_vector(4, 12, den);
        ++vectors;
        const Rational enumerated = lambda_of_vector(spec, x);
        const Rational closed = density_formula(a, x);
        r.expect(enumerated == closed, "enumeration vs closed form at " + x.to_string());
        const int n = 240 * den;
        const Rational finite = finite_lambda(spec, x, n);
        const Rational gap = abs(finite - closed);
        if (gap > worst) worst = gap;
        r.expect(gap <= ratio(8 * k * k, n), "finite density at " + x.to_string());
      }
    }
  r.detail << shapes << " shapes x 200 vectors (" << vectors << "), largest finite gap " << Rational(worst).get_d();
  return r;
}

Result criterion3() {
  Result r;
  const ObjectiveSpec spec = kp({2, 1, 1, 1});
  const PartiteVector x = equal_parts(8);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      const Rational g = flip_gradient(spec, x, i, j);
      r.expect(g == (i == j ? ratio(84, 512) : ratio(150, 512)), "flip " + std::to_string(i) + "," + std::to_string(j));
    }
  const Rational lambda = lambda_of_vector(spec, x);
  int argmax = -1;
  Rational best(-1);
  bool unique = true;
  for (int k = 0; k <= 8; ++k) {
    const Rational v = attach_value(spec, x, pattern_from_mask(x, (1UL << k) - 1, 1));
    const Rational formula = ratio(24, 4096) * Rational(binomial(k, 3)) * (Rational(19, 2) - k);
    r.expect(v == formula, "attachment table at k=" + std::to_string(k));
    if (v > best) {
      best = v;
      argmax = k;
      unique = true;
    } else if (v == best) {
      unique = false;
    }
  }
  r.expect(argmax == 7 && unique && best == lambda, "unique maximum at k=7");
  r.detail << "flips 150/512 and 84/512; table k=0..8 matches, max " << to_string(best) << " at k=" << argmax;
  return r;
}

Result criterion4() {
  Result r;
  const std::vector<Partition> shapes = {{2, 2}, {2, 1}, {3}, {2, 1, 1}, {3, 1}, {2, 2, 1}, {1, 1, 1}, {3, 1, 1}, {2, 1, 1, 1}};
  int checked = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const Partition& a = shapes[static_cast<std::size_t>(uniform_int(0, static_cast<int>(shapes.size()) - 1))];
    const ObjectiveSpec spec = kp(a);
    int den = 1;
    const PartiteVector x = random_vector(4, 10, den);
    for (int i : x.extended_support()) {
      const Rational lhs = numeric_free_partial(spec, x, i) / spec.k();
      const Rational rhs = attach_value(spec, x, clone_pattern(x, i));
      r.expect(lhs == rhs, "identity at " + x.to_string());
      ++checked;
    }
  }
  const Rational r1 = lagrange_residual(kp({2, 1, 1, 1}), equal_parts(8));
  const Rational r2 = lagrange_residual(kp({3, 1, 1}), k311_vector());
  const Rational r3 = lagrange_residual(kp({2, 2}), equal_parts(2));
  r.expect(r1 == 0 && r2 == 0 && r3 == 0, "residual at certified maximisers");
  r.detail << "100 pairs (" << checked << " coordinates) exact; residuals " << to_string(r1) << ", " << to_string(r2) << ", "
           << to_string(r3);
  return r;
}

Result criterion5() {
  Result r;
  struct Case {
    std::string name;
    ObjectiveSpec spec;
    int support;
    PartiteVector expected;
    Rational value;
  };
  std::vector<Case> cases = {
      {"C4", kp({2, 2}), 6, equal_parts(2), ratio(3, 8)},
      {"K2111", kp({2, 1, 1, 1}), 10, equal_parts(8), ratio(525, 1024)},
      {"K311", kp({3, 1, 1}), 6, k311_vector(), ratio(216, 625)},
      {"K2(2)", kp({2, 2}), 6, equal_parts(2), ratio(3, 8)},
      {"K2(3)", kp({3, 3}), 6, equal_parts(2), ratio(5, 16)},
      {"K3(2)", kp({2, 2, 2}), 6, equal_parts(3), ratio(10, 81)},
  };
  for (auto& c : cases) {
    OptOptions opts;
    opts.max_support = c.support;
    opts.starts = 200;
    opts.seed = 7;
    const CandidateSet set = continuous_opt(c.spec, opts);
    bool found = false;
    for (std::size_t i : set.maximisers) {
      const Candidate& cand = set.candidates[i];
      if (cand.snapped && *cand.snapped == c.expected && cand.exact_value == c.value &&
          std::fabs(cand.value - c.value.get_d()) <= 1e-9)
        found = true;
    }
    r.expect(found, c.name);
    r.detail << c.name << (found ? " ok " : " missing ");
  }
  return r;
}

bool check_named(const CertificateReport& rep, const std::string& name) {
  for (auto& c : rep.checks)
    if (c.name == name) return c.pass;
  return false;
}

Result criterion6() {
  Result r;
  const CertificateReport a = certify_k2111();
  r.expect(a.verdict == Verdict::Pass && a.lambda_max == "525/1024", "certify_k2111 " + a.first_failure);
  r.expect(check_named(a, "eliminant_l1_divisible"), "eliminant at l=1");
  for (int l = 1; l <= 7; ++l) r.expect(check_named(a, "bb_h_l" + std::to_string(l)), "bb h_l for l=" + std::to_string(l));
  const CertificateReport b = certify_k311();
  r.expect(b.verdict == Verdict::Pass && b.lambda_max == "216/625", "certify_k311 " + b.first_failure);
  for (const char* name : {"psd_R0", "psd_Q1", "psd_Q2", "psd_Q3", "p_times_r1_positive", "epsilon_lower_bound", "bb_h_negative"})
    r.expect(check_named(b, name), name);
  r.detail << "k2111 " << verdict_name(a.verdict) << " (" << a.checks.size() << " checks), k311 " << verdict_name(b.verdict)
           << " (" << b.checks.size() << " checks)";
  return r;
}

Result criterion7() {
  Result r;
  struct Case {
    std::string name;
    ObjectiveSpec spec;
    PartiteVector x;
  };
  const std::vector<Case> good = {
      {"K22", kp({2, 2}), equal_parts(2)},
      {"K2111", kp({2, 1, 1, 1}), equal_parts(8)},
      {"K311", kp({3, 1, 1}), k311_vector()},
      {"K2(3)", kp({3, 3}), equal_parts(2)},
      {"K3(2)", kp({2, 2, 2}), equal_parts(3)},
      {"K4(2)", kp({2, 2, 2, 2}), equal_parts(4)},
  };
  for (auto& c : good) {
    const StrictnessReport rep = strictness_certificate(c.spec, {c.x});
    r.expect(rep.pass && rep.c > 0, c.name);
    r.detail << c.name << " c=" << to_string(rep.c) << "; ";
  }
  const ObjectiveSpec sum = ObjectiveSpec::all_complete_partite_sum(3);
  const StrictnessReport bad = strictness_certificate(sum, {equal_parts(2)});
  r.expect(!bad.pass && bad.c == 0, "sum counterexample must fail with c = 0");
  r.detail << "sum(k=3) " << (bad.pass ? "pass" : "fail") << " c=" << to_string(bad.c);
  return r;
}

Graph random_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform_int(0, 1)) g.set_edge(u, v, true);
  return g;
}

Result criterion8() {
  Result r;
  const ObjectiveSpec spec = kp({2, 2});
  long steps = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const int n = uniform_int(4, 10);
    const Graph g = random_graph(n);
    const SymmetrisationTrace t = symmetrise_full(spec, g);
    Rational prev = lambda_graph(spec, g).lambda;
    for (auto& s : t.steps) {
      r.expect(s.lambda_before == prev && s.lambda_after >= s.lambda_before, "monotone trace");
      prev = s.lambda_after;
    }
    r.expect(prev == lambda_graph(spec, t.final_graph).lambda, "final value");
    r.expect(static_cast<long>(t.steps.size()) <= Rational(binomial(n, 2)).get_d(), "step bound");
    r.expect(complete_partite_shape_of(t.final_graph).has_value(), "complete partite output");
    steps += static_cast<long>(t.steps.size());
  }
  int vertex_steps = 0;
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<int> sizes;
    int n = 0;
    while (n < 4 || (n < 9 && uniform_int(0, 2))) {
      sizes.push_back(uniform_int(1, 3));
      n += sizes.back();
    }
    Graph base = Graph::complete_partite(sizes);
    Graph g(n + 1);
    for (auto& [u, v] : base.edges()) g.set_edge(u, v, true);
    for (int v = 0; v < n; ++v)
      if (uniform_int(0, 1)) g.set_edge(n, v, true);
    const SymmetrisationTrace t = symmetrise_vertex(spec, g, n);
    Rational prev = lambda_graph(spec, g).lambda;
    for (auto& s : t.steps) {
      r.expect(s.pairs_edited == 1, "Sym2 edits one pair per step");
      r.expect(s.lambda_before == prev && s.lambda_after >= prev, "Sym2 monotone");
      prev = s.lambda_after;
    }
    // z (the last vertex) ends complete or empty to every part of g − z.
    const auto parts = complete_partite_parts(base);
    for (auto& part : *parts) {
      int joined = 0;
      for (int v : part) joined += t.final_graph.adjacent(n, v) ? 1 : 0;
      r.expect(joined == 0 || joined == static_cast<int>(part.size()), "Sym2 neighbourhood is a union of parts");
    }
    vertex_steps += static_cast<int>(t.steps.size());
  }
  r.detail << "200 graphs, " << steps << " clone steps; 100 vertex runs, " << vertex_steps << " single-pair steps";
  return r;
}

Result criterion9() {
  Result r;
  const ObjectiveSpec spec = kp({2, 1});
  for (int n = 5; n <= 7; ++n) {
    const BruteMax brute = brute_lambda_max(spec, n);
    const FiniteOptResult fin = finite_opt(spec, n);
    r.expect(brute.value == fin.value, "n=" + std::to_string(n));
    r.detail << "n=" << n << ": " << to_string(brute.value) << " = " << to_string(fin.value) << "; ";
  }
  return r;
}

Rational norm2(const PartiteVector& x) {
  Rational s(0);
  for (auto& v : x.parts()) s += v * v;
  return s;
}

Result criterion10() {
  Result r;
  for (int rep = 0; rep < 50; ++rep) {
    int den = 1;
    const PartiteVector x = random_vector(5, 12, den);
    r.expect(edit_distance_vectors(x, PartiteVector()) == norm2(x), "distance to zero at " + x.to_string());
  }
  for (int rep = 0; rep < 100; ++rep) {
    int d1 = 1, d2 = 1, d3 = 1;
    const PartiteVector x = random_vector(3, 8, d1), y = random_vector(3, 8, d2), z = random_vector(3, 8, d3);
    const Rational xy = edit_distance_vectors(x, y), yx = edit_distance_vectors(y, x);
    const Rational yz = edit_distance_vectors(y, z), xz = edit_distance_vectors(x, z);
    r.expect(xy == yx, "symmetry");
    r.expect(edit_distance_vectors(x, x) == 0, "identity");
    r.expect((xy == 0) == (x == y), "indiscernibles");
    r.expect(xz <= xy + yz, "triangle");
  }
  Rational worst(0);
  for (int rep = 0; rep < 20; ++rep) {
    int d1 = 1, d2 = 1;
    const PartiteVector x = random_vector(3, 8, d1), y = random_vector(3, 8, d2);
    const Graph gx = shape_graph(realisation(8, x)), gy = shape_graph(realisation(8, y));
    const Rational gap = abs(edit_distance_exact(gx, gy) - edit_distance_vectors(x, y));
    if (gap > worst) worst = gap;
    r.expect(gap <= ratio(2 * 9, 64), "realisation at n=8");
  }
  r.detail << "50 zero-distance, 100 triples, 20 realisations (largest gap " << worst.get_d() << ")";
  return r;
}

// lo < (a + √b)/c < hi with c > 0, decided exactly.
bool contains_surd(const Rational& lo, const Rational& hi, const Rational& a, const Rational& b, const Rational& c) {
  auto less_than_surd = [&](const Rational& q) {  // q·c − a < √b
    const Rational d = q * c - a;
    return d < 0 || d * d < b;
  };
  auto greater_than_surd = [&](const Rational& q) {
    const Rational d = q * c - a;
    return d > 0 && d * d > b;
  };
  return less_than_surd(lo) && greater_than_surd(hi);
}

Result criterion11() {
  Result r;
  const KstResult k = kst_maximiser(1, 4);
  r.expect(!k.alpha.is_rational() && k.alpha.hi() - k.alpha.lo() <= pow(Rational(1, 2), 40), "width");
  r.expect(contains_surd(k.alpha.lo(), k.alpha.hi(), 3, 3, 6), "contains (3+sqrt3)/6");
  r.expect(k.x_root.has_value(), "root of h isolated");
  // x = 2 − √3: lo < 2 − √3 < hi  ⇔  √3 < 2 − lo and √3 > 2 − hi.
  if (!k.x_root) return r;
  const Rational xl = k.x_root->lo(), xh = k.x_root->hi();
  const bool x_in = (2 - xl > 0 && (2 - xl) * (2 - xl) > 3) && (2 - xh < 0 || (2 - xh) * (2 - xh) < 3);
  r.expect(x_in, "root 2 - sqrt3 isolated");
  r.expect(k.h == UPoly::from_coeffs({-1, 4, 0, -4, 1}), "h(x) = x^4 - 4x^3 + 4x - 1");
  r.expect(divides(UPoly::from_coeffs({1, -4, 1}), k.h), "x^2 - 4x + 1 divides h");
  r.expect(1 - k.alpha.hi() > Rational(1, 5), "1 - alpha > 1/5");
  int half_cases = 0;
  for (int s = 1; s <= 9; ++s)
    for (int t = s; s + t <= 10; ++t) {
      if (s * t < 2) continue;
      const int d = t - s;
      if (s < d * (d - 1) / 2) continue;
      const KstResult kk = kst_maximiser(s, t);
      r.expect(kk.half && kk.alpha.is_rational() && *kk.alpha.rational() == Rational(1, 2),
               "alpha = 1/2 for (" + std::to_string(s) + "," + std::to_string(t) + ")");
      ++half_cases;
    }
  r.detail << "alpha in [" << k.alpha.lo().get_d() << ", " << k.alpha.hi().get_d() << "], 1 - alpha_hi = "
           << Rational(1 - k.alpha.hi()).get_d() << "; " << half_cases << " (s,t) with alpha = 1/2";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"exact constants", criterion1},       {"triple agreement", criterion2},   {"gradients", criterion3},
      {"lagrange identity", criterion4},     {"opt search", criterion5},         {"certificates", criterion6},
      {"strictness", criterion7},            {"symmetrisation", criterion8},     {"oracle equivalence", criterion9},
      {"edit metric", criterion10},          {"kst solver", criterion11},
  };
  bool all = true;
  int index = 0;
  for (auto& [name, fn] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Result res;
    try {
      res = fn();
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && res.pass;
    std::cout << (res.pass ? "PASS" : "FAIL") << " [" << index << "] " << name << ": " << res.detail.str() << " ("
              << std::fixed;
    std::cout.precision(1);
    std::cout << secs << "s)" << std::endl;
    std::cout.unsetf(std::ios::fixed);
    std::cout.precision(6);
  }
  return all ? 0 : 1;
}
