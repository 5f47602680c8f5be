#include "symstab/opt_search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include "json.hpp"
#include <numeric>
#include <random>
#include <stdexcept>

#include "symstab/density.hpp"
#include "symstab/perturbation.hpp"
#include "symstab/parallel.hpp"

namespace symstab {

Rational lambda_of_shape(const ObjectiveSpec& spec, const CompletePartiteShape& shape) {
  const int n = shape.order();
  if (n < spec.k()) throw std::invalid_argument("shape smaller than k");
  Rational total = 0;
  for (auto& [a, g] : spec.partite_expansion()) total += g * Rational(count_partite(a, shape));
  return total / Rational(binomial(n, spec.k()));
}

FiniteOptResult finite_opt(const ObjectiveSpec& spec, int n) {
  if (n > 40) throw std::invalid_argument("finite_opt supports n <= 40");
  if (n < spec.k()) throw std::invalid_argument("finite_opt needs n >= k");
  const auto parts = partitions_of(n);
  auto values = parallel_map<Rational>(parts.size(), [&](std::size_t i) {
    return lambda_of_shape(spec, make_shape(parts[i]));
  });
  FiniteOptResult r;
  r.n = n;
  r.evaluated = parts.size();
  r.value = *std::max_element(values.begin(), values.end());
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (values[i] == r.value) r.shapes.push_back(make_shape(parts[i]));
  return r;
}

namespace {

// Euclidean projection onto the probability simplex.
void project_simplex(std::vector<double>& y) {
  std::vector<double> u = y;
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0, theta = 0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cumulative += u[j];
    const double t = (cumulative - 1) / static_cast<double>(j + 1);
    if (u[j] - t > 0) theta = t;
  }
  for (double& v : y) v = std::max(0.0, v - theta);
}

double evaluate(const ObjectiveSpec& spec, const std::vector<double>& y, std::vector<double>* grad) {
  std::vector<double> parts(y.begin() + 1, y.end());
  if (!grad) return lambda_double(spec, y[0], parts);
  return lambda_gradient(spec, y[0], parts, *grad);
}

double residual_of(const ObjectiveSpec& spec, const std::vector<double>& y) {
  std::vector<double> g;
  const double v = evaluate(spec, y, &g);
  const double k = spec.k();
  double r = 0;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] > 1e-9) r = std::max(r, std::fabs(g[i] / k - v));
  return r;
}

// Projected gradient ascent with Barzilai–Borwein steps and Armijo backtracking.
double ascend(const ObjectiveSpec& spec, std::vector<double>& y, int iterations) {
  std::vector<double> g, g_prev, y_prev;
  double value = evaluate(spec, y, &g);
  double step = 0.1;
  for (int it = 0; it < iterations; ++it) {
    if (!y_prev.empty()) {
      double sy = 0, ss = 0;
      for (std::size_t i = 0; i < y.size(); ++i) {
        const double s = y[i] - y_prev[i], d = g[i] - g_prev[i];
        ss += s * s;
        sy += s * d;
      }
      if (sy < 0 && ss > 0) step = std::clamp(-ss / sy, 1e-6, 10.0);
      else step = std::min(step * 2, 10.0);
    }
    bool moved = false;
    for (int bt = 0; bt < 60; ++bt) {
      std::vector<double> cand = y;
      for (std::size_t i = 0; i < y.size(); ++i) cand[i] += step * g[i];
      project_simplex(cand);
      double dir = 0, dist = 0;
      for (std::size_t i = 0; i < y.size(); ++i) {
        dir += g[i] * (cand[i] - y[i]);
        dist += (cand[i] - y[i]) * (cand[i] - y[i]);
      }
      if (dist < 1e-32) break;
      std::vector<double> g_new;
      const double v_new = evaluate(spec, cand, &g_new);
      if (v_new >= value + 1e-4 * dir || (v_new >= value && dist < 1e-24)) {
        y_prev = y;
        g_prev = g;
        y = std::move(cand);
        g = std::move(g_new);
        value = v_new;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  // Zero out dust so supports are clean.
  for (double& v : y)
    if (v < 1e-12) v = 0;
  const double total = std::accumulate(y.begin(), y.end(), 0.0);
  for (double& v : y) v /= total;
  return evaluate(spec, y, nullptr);
}

// Canonical ordering: x0 first, parts sorted decreasingly.
std::vector<double> canonical_point(std::vector<double> y) {
  std::sort(y.begin() + 1, y.end(), std::greater<>());
  return y;
}

// Local search with merge/split moves around a converged point.
double improve_with_moves(const ObjectiveSpec& spec, std::vector<double>& y, int iterations) {
  double best = ascend(spec, y, iterations);
  for (int round = 0; round < 4; ++round) {
    bool improved = false;
    std::vector<double> c = canonical_point(y);
    std::vector<std::size_t> live;
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] > 0) live.push_back(i);
    std::vector<std::vector<double>> moves;
    // Merge the two smallest parts; move the smallest part into the clique.
    if (live.size() >= 2) {
      auto m = c;
      m[live[live.size() - 2]] += m[live.back()];
      m[live.back()] = 0;
      moves.push_back(m);
    }
    if (!live.empty()) {
      auto m = c;
      m[0] += m[live.back()];
      m[live.back()] = 0;
      moves.push_back(m);
    }
    // Split the largest part into a free slot.
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] == 0 && !live.empty()) {
        auto m = c;
        m[i] = m[live.front()] / 2;
        m[live.front()] /= 2;
        moves.push_back(m);
        break;
      }
    for (auto& m : moves) {
      const double v = ascend(spec, m, iterations);
      if (v > best + 1e-12) {
        best = v;
        y = m;
        improved = true;
      }
    }
    if (!improved) break;
  }
  return best;
}

std::vector<double> vector_point(const PartiteVector& x, int dims) {
  std::vector<double> y(static_cast<std::size_t>(dims), 0.0);
  y[0] = x.clique_mass().get_d();
  for (int i = 1; i <= x.support_size() && i < dims; ++i) y[static_cast<std::size_t>(i)] = x.entry(i).get_d();
  double total = std::accumulate(y.begin(), y.end(), 0.0);
  for (double& v : y) v /= total;
  return y;
}

std::optional<PartiteVector> snap(const std::vector<double>& y) {
  std::vector<Rational> parts;
  for (std::size_t i = 1; i < y.size(); ++i) {
    if (y[i] <= 1e-7) continue;
    const Rational q = best_approximation(y[i], 64);
    if (std::fabs(q.get_d() - y[i]) > 1e-7) return std::nullopt;
    parts.push_back(q);
  }
  Rational sum = 0;
  for (auto& p : parts) sum += p;
  if (sum > 1) return std::nullopt;
  if (std::fabs(Rational(1 - sum).get_d() - y[0]) > 1e-7 * static_cast<double>(y.size())) return std::nullopt;
  return PartiteVector::from_unsorted(parts);
}

}  // namespace

CandidateSet continuous_opt(const ObjectiveSpec& spec, const OptOptions& options) {
  const int M = options.max_support;
  if (M < 1 || M > 10) throw std::invalid_argument("continuous_opt: max_support must be in 1..10");
  const int dims = M + 1;
  std::vector<std::vector<double>> starts;
  // Uniform splits, with and without clique mass.
  for (int r = 1; r <= M; ++r) starts.push_back(vector_point(PartiteVector::uniform(r), dims));
  for (int step = 1; step <= 9; ++step)
    for (int r = 1; r <= M; r += (M > 4 ? 2 : 1)) {
      std::vector<double> y(static_cast<std::size_t>(dims), 0.0);
      y[0] = step / 10.0;
      for (int i = 1; i <= r; ++i) y[static_cast<std::size_t>(i)] = (1 - y[0]) / r;
      starts.push_back(y);
    }
  for (int n = std::max(spec.k(), 2 * spec.k()); n <= std::min(40, 4 * spec.k()); n += spec.k()) {
    for (auto& shape : finite_opt(spec, n).shapes) {
      std::vector<double> y(static_cast<std::size_t>(dims), 0.0);
      int slot = 1;
      for (int p : shape.part_sizes) {
        if (p == 1) y[0] += 1.0 / n;
        else if (slot < dims) y[static_cast<std::size_t>(slot++)] += static_cast<double>(p) / n;
        else y[0] += static_cast<double>(p) / n;
      }
      starts.push_back(y);
    }
  }
  for (auto& s : options.seeds) starts.push_back(vector_point(s, dims));
  std::mt19937_64 rng(options.seed);
  std::gamma_distribution<double> gamma(1.0, 1.0);
  std::uniform_int_distribution<int> support_dist(1, M);
  while (static_cast<int>(starts.size()) < options.starts) {
    std::vector<double> y(static_cast<std::size_t>(dims), 0.0);
    const int r = support_dist(rng);
    const bool clique = (rng() & 1u) != 0;
    double total = 0;
    for (int i = 0; i <= r; ++i) {
      if (i == 0 && !clique) continue;
      y[static_cast<std::size_t>(i)] = gamma(rng);
      total += y[static_cast<std::size_t>(i)];
    }
    for (double& v : y) v /= total;
    starts.push_back(y);
  }

  struct Local {
    std::vector<double> y;
    double value, residual;
  };
  auto locals = parallel_map<Local>(starts.size(), [&](std::size_t i) {
    std::vector<double> y = starts[i];
    const double v = improve_with_moves(spec, y, options.max_iterations);
    y = canonical_point(y);
    return Local{y, v, residual_of(spec, y)};
  });

  CandidateSet set;
  set.starts = static_cast<int>(starts.size());
  set.seed = options.seed;
  std::vector<Local> good;
  for (auto& l : locals)
    if (l.residual <= 1e-8) good.push_back(l);
  set.converged = static_cast<int>(good.size());
  std::stable_sort(good.begin(), good.end(), [](const Local& a, const Local& b) { return a.value > b.value; });
  for (auto& l : good) {
    bool merged = false;
    for (auto& c : set.candidates) {
      double d = 0;
      for (std::size_t i = 0; i < l.y.size(); ++i) d = std::max(d, std::fabs(l.y[i] - c.point[i]));
      if (d <= 1e-6) {
        ++c.hits;
        merged = true;
        break;
      }
    }
    if (merged) continue;
    Candidate c;
    c.point = l.y;
    c.value = l.value;
    c.residual = l.residual;
    c.hits = 1;
    if (auto s = snap(l.y)) {
      const Rational ev = lambda_closed_form(spec, *s);
      if (ev.get_d() >= l.value - 1e-12) {
        c.snapped = s;
        c.exact_value = ev;
        c.exact_residual = lagrange_residual(spec, *s);
      }
    }
    set.candidates.push_back(std::move(c));
  }
  if (!set.candidates.empty()) {
    const double best = set.candidates.front().value;
    for (std::size_t i = 0; i < set.candidates.size(); ++i)
      if (set.candidates[i].value >= best - 1e-9) set.maximisers.push_back(i);
  }
  return set;
}

UPoly kst_f(int s, int t) {
  const UPoly a = UPoly::variable(), b = UPoly(1) - a;
  return a.pow(static_cast<unsigned>(s)) * b.pow(static_cast<unsigned>(t)) +
         a.pow(static_cast<unsigned>(t)) * b.pow(static_cast<unsigned>(s));
}

UPoly kst_h(int s, int t) {
  return UPoly::monomial(s, t - s + 1) - UPoly::monomial(t, t - s) + UPoly::monomial(t, 1) - UPoly(s);
}

namespace {

Interval eval_interval(const UPoly& p, const Interval& x) {
  Interval acc(Rational(0));
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + Interval(p.coeff(i));
  return acc;
}

}  // namespace

KstResult kst_maximiser(int s, int t) {
  if (s > t) std::swap(s, t);
  if (s < 1 || s * t < 2) throw std::invalid_argument("kst_maximiser: need st >= 2");
  KstResult r;
  r.s = s;
  r.t = t;
  r.h = kst_h(s, t);
  const int d = t - s;
  r.half = s >= d * (d - 1) / 2;
  if (!r.half) {
    // Root of h in (0,1); x = 1 is always a root and is stripped first.
    UPoly q = squarefree_part(r.h);
    const UPoly lin = UPoly::from_coeffs({Rational(-1), Rational(1)});
    while (q(1) == 0) q = divmod(q, lin).first;
    auto roots = isolate_roots(q, 0, 1, pow(Rational(1, 2), 44));
    if (roots.size() != 1) throw std::logic_error("kst_maximiser: expected a unique root of h in (0,1)");
    r.x_root = AlgebraicNumber(q, roots[0].first, roots[0].second);
    r.x_root->refine(pow(Rational(1, 2), 44));
    if (r.x_root->is_rational()) {
      r.alpha = AlgebraicNumber(1 / (1 + *r.x_root->rational()));
    } else {
      // α = 1/(1+x): α-polynomial Σ c_i (1−α)^i α^{deg−i}.
      const UPoly a = UPoly::variable(), b = UPoly(1) - a;
      UPoly pa;
      for (int i = 0; i <= q.degree(); ++i)
        pa += UPoly(q.coeff(i)) * b.pow(static_cast<unsigned>(i)) * a.pow(static_cast<unsigned>(q.degree() - i));
      const Rational alo = 1 / (1 + r.x_root->hi()), ahi = 1 / (1 + r.x_root->lo());
      r.alpha = AlgebraicNumber(pa, alo, ahi);
      r.alpha.refine(pow(Rational(1, 2), 40));
    }
  }
  const UPoly f = kst_f(s, t);
  const Interval ai = r.alpha.is_rational() ? Interval(*r.alpha.rational()) : Interval(r.alpha.lo(), r.alpha.hi());
  r.max_f = eval_interval(f, ai);
  Rational factor(binomial(s + t, s));
  if (s == t) factor /= 2;
  r.inducibility = Interval(r.max_f.lo * factor, r.max_f.hi * factor);
  return r;
}

std::string candidate_set_to_json(const CandidateSet& set) {
  nlohmann::json j;
  j["starts"] = set.starts;
  j["converged"] = set.converged;
  j["seed"] = set.seed;
  j["maximisers"] = set.maximisers;
  j["candidates"] = nlohmann::json::array();
  for (auto& c : set.candidates) {
    nlohmann::json cj{{"point", c.point}, {"value", c.value}, {"residual", c.residual}, {"hits", c.hits}};
    if (c.snapped) {
      cj["snapped"] = nlohmann::json::parse(partite_vector_to_json(*c.snapped));
      cj["exact_value"] = to_string(c.exact_value);
      cj["exact_residual"] = to_string(c.exact_residual);
    }
    j["candidates"].push_back(cj);
  }
  return j.dump(2);
}

}  // namespace symstab
