#include "symstab/strictness.hpp"

#include <algorithm>
#include "json.hpp"
#include <stdexcept>

#include "symstab/density.hpp"
#include "symstab/finite_partite.hpp"
#include "symstab/parallel.hpp"

namespace symstab {

Str1Result check_str1(const ObjectiveSpec& spec, const PartiteVector& x) {
  Str1Result r;
  const auto support = x.extended_support();
  std::vector<std::pair<int, int>> pairs;
  for (int a : support)
    for (int b : support) pairs.emplace_back(a, b);
  auto values = parallel_map<Rational>(pairs.size(), [&](std::size_t t) {
    return flip_gradient(spec, x, pairs[t].first, pairs[t].second);
  });
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    r.flips.push_back({pairs[t].first, pairs[t].second, values[t]});
    if (t == 0 || values[t] < r.minimum) r.minimum = values[t];
  }
  return r;
}

std::vector<Rational> compute_w(const PartiteVector& x, const AttachmentPattern& p) {
  std::vector<Rational> w;
  const auto support = x.extended_support();
  for (int i : support) {
    Rational wi = 0;
    if (i > 0 && p.joined(i)) wi += x.entry(i);
    for (int j : support)
      if (j != 0 && j != i && !p.joined(j)) wi += x.entry(j);
    w.push_back(wi);
  }
  return w;
}

bool str2_margin_holds(const UPoly& g, const Rational& x0, const Rational& w_min, const Rational& c) {
  if (x0 == 0) return g(1) >= c * w_min;
  const UPoly rhs = UPoly(x0) * (UPoly(1) - UPoly::variable()) + UPoly(w_min);
  return nonnegative_on(g - UPoly(c) * rhs, 0, 1);
}

namespace {

void solve_pattern(PatternMargin& m, const Rational& x0) {
  const UPoly& g = m.gradient;
  if (x0 == 0) {
    const Rational g1 = g(1);
    if (m.w_min == 0) {
      m.constrained = false;
      m.infeasible = g1 < 0;
      return;
    }
    m.c = g1 / m.w_min;
    m.exact = true;
    return;
  }
  const UPoly rhs = UPoly(x0) * (UPoly(1) - UPoly::variable()) + UPoly(m.w_min);
  if (m.w_min == 0 && g(1) < 0) {
    m.infeasible = true;
    return;
  }
  // Upper bound from sampled ratios (r > 0 on [0,1)).
  Rational hi = g(0) / rhs(0);
  for (int j = 1; j < 64; ++j) {
    const Rational a = ratio(j, 64);
    hi = std::min(hi, Rational(g(a) / rhs(a)));
  }
  if (m.w_min > 0) hi = std::min(hi, Rational(g(1) / rhs(1)));
  if (str2_margin_holds(g, x0, m.w_min, hi)) {
    m.c = hi;
    m.exact = true;
    return;
  }
  Rational gap = 1;
  Rational lo = hi - gap;
  int tries = 0;
  while (!str2_margin_holds(g, x0, m.w_min, lo)) {
    gap *= 2;
    lo = hi - gap;
    if (++tries > 80) {
      m.infeasible = true;
      return;
    }
  }
  const Rational eps = pow(Rational(1, 2), 30);
  while (hi - lo > eps) {
    const Rational mid = (lo + hi) / 2;
    if (str2_margin_holds(g, x0, m.w_min, mid)) lo = mid;
    else hi = mid;
  }
  const Rational snapped = simplest_between(lo, hi);
  m.c = str2_margin_holds(g, x0, m.w_min, snapped) ? snapped : lo;
}

}  // namespace

Str2Result check_str2(const ObjectiveSpec& spec, const PartiteVector& x) {
  const int m = x.support_size();
  if (m > 20) throw std::invalid_argument("check_str2: support too large for 2^m patterns");
  const unsigned long count = 1ul << m;
  Str2Result r;
  r.patterns = parallel_map<PatternMargin>(count, [&](std::size_t mask) {
    PatternMargin pm;
    pm.mask = mask;
    AttachmentPattern p = pattern_from_mask(x, mask, 1);
    pm.gradient = vertex_gradient_polynomial(spec, x, p.b);
    auto w = compute_w(x, p);
    pm.w_min = *std::min_element(w.begin(), w.end());
    solve_pattern(pm, x.clique_mass());
    return pm;
  });
  for (auto& pm : r.patterns) {
    if (pm.infeasible) r.infeasible = true;
    if (pm.constrained && !pm.infeasible && (!r.c || pm.c < *r.c)) r.c = pm.c;
  }
  return r;
}

StrictnessReport strictness_certificate(const ObjectiveSpec& spec, const std::vector<PartiteVector>& candidates) {
  StrictnessReport rep;
  bool first = true;
  bool any_infeasible = false;
  for (auto& x : candidates) {
    CandidateStrictness cs{x, check_str1(spec, x), check_str2(spec, x), 0};
    Rational c2 = cs.str2.c ? *cs.str2.c : cs.str1.minimum;
    if (cs.str2.infeasible) {
      c2 = 0;
      any_infeasible = true;
    }
    cs.c = std::min(cs.str1.minimum, c2);
    if (first || cs.str1.minimum < rep.c1) rep.c1 = cs.str1.minimum;
    if (first || c2 < rep.c2) rep.c2 = c2;
    first = false;
    rep.candidates.push_back(std::move(cs));
  }
  if (candidates.empty()) return rep;
  rep.c = std::min(rep.c1, rep.c2);
  if (rep.c < 0) rep.c = 0;
  rep.pass = rep.c > 0 && !any_infeasible;
  return rep;
}

FiniteStrictness finite_strictness_check(const ObjectiveSpec& spec, const PartiteVector& x, int n) {
  const int k = spec.k();
  FiniteStrictness out;
  out.n = n;
  auto layout = realisation_layout(n, x);
  // Pair types over realised classes.
  std::vector<int> idx;
  if (layout.clique_size >= 1) idx.push_back(0);
  for (int i = 1; i <= x.support_size(); ++i)
    if (layout.part_sizes[static_cast<std::size_t>(i - 1)] > 0) idx.push_back(i);
  auto size_of = [&](int i) { return i == 0 ? layout.clique_size : layout.part_sizes[static_cast<std::size_t>(i - 1)]; };
  const Rational scale_pair = Rational(binomial(n - 2, k - 2)) / Rational(binomial(n, k)) * Rational(n) * Rational(n);
  bool first = true;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a; b < idx.size(); ++b) {
      if (idx[a] == idx[b] && size_of(idx[a]) < 2) continue;
      const Rational v = finite_flip_gradient(spec, x, n, idx[a], idx[b]) * scale_pair;
      if (first || v < out.c1) out.c1 = v;
      first = false;
    }
  // Attachments: every b over supp(x) and every joined clique count.
  const Rational lam = finite_lambda(spec, x, n);
  const int m = x.support_size();
  const long v0 = layout.clique_size;
  bool first2 = true;
  // Edits turning u (pattern b, a joined clique vertices) into a clone of part i (0 = V0).
  auto edits = [&](const std::vector<bool>& b, long a, int i) {
    long wi = v0 - a;
    for (int j = 1; j <= m; ++j) {
      const long sj = layout.part_sizes[static_cast<std::size_t>(j - 1)];
      if (j == i) wi += b[static_cast<std::size_t>(j)] ? sj : 0;
      else wi += b[static_cast<std::size_t>(j)] ? 0 : sj;
    }
    return wi;
  };
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::vector<bool> b(static_cast<std::size_t>(m) + 1, false);
    for (int i = 1; i <= m; ++i) b[static_cast<std::size_t>(i)] = (mask >> (i - 1)) & 1ul;
    bool absorbed_join = false;
    for (int i = 1; i <= m; ++i)
      if (b[static_cast<std::size_t>(i)] && layout.part_sizes[static_cast<std::size_t>(i - 1)] == 0) absorbed_join = true;
    if (absorbed_join) continue;
    for (long a = 0; a <= v0; ++a) {
      if (v0 == 0 && a > 0) break;
      const Rational alpha = v0 == 0 ? Rational(1) : ratio(a, v0);
      long W = -1;
      for (int i : idx) {
        const long wi = edits(b, a, i);
        if (W < 0 || wi < W) W = wi;
      }
      if (W == 0) continue;
      const Rational att = finite_attach_value(spec, x, n, b, alpha);
      const Rational v = Rational(n) * (lam - att) / Rational(W);
      if (first2 || v < out.c2) out.c2 = v;
      first2 = false;
    }
  }
  for (int i : idx) {
    std::vector<bool> b(static_cast<std::size_t>(m) + 1, true);
    b[0] = false;
    if (i > 0) b[static_cast<std::size_t>(i)] = false;
    if (edits(b, v0, i) != 0) out.clone_edits_zero = false;
  }
  out.pass = out.c1 > 0 && (first2 || out.c2 > 0);
  return out;
}

std::string strictness_to_json(const StrictnessReport& report) {
  nlohmann::json j;
  j["pass"] = report.pass;
  j["c"] = to_string(report.c);
  j["c1"] = to_string(report.c1);
  j["c2"] = to_string(report.c2);
  j["candidates"] = nlohmann::json::array();
  for (auto& cs : report.candidates) {
    nlohmann::json c;
    c["vector"] = nlohmann::json::parse(partite_vector_to_json(cs.x));
    c["c"] = to_string(cs.c);
    c["str1_min"] = to_string(cs.str1.minimum);
    for (auto& f : cs.str1.flips) c["flips"].push_back({{"i1", f.i1}, {"i2", f.i2}, {"value", to_string(f.value)}});
    for (auto& p : cs.str2.patterns) {
      nlohmann::json pj{{"mask", p.mask},
                        {"gradient", p.gradient.to_string("alpha")},
                        {"w_min", to_string(p.w_min)},
                        {"constrained", p.constrained},
                        {"infeasible", p.infeasible}};
      if (p.constrained && !p.infeasible) {
        pj["c"] = to_string(p.c);
        pj["exact"] = p.exact;
      }
      c["patterns"].push_back(pj);
    }
    c["str2_c"] = cs.str2.c ? nlohmann::json(to_string(*cs.str2.c)) : nlohmann::json(nullptr);
    j["candidates"].push_back(c);
  }
  return j.dump(2);
}

}  // namespace symstab
