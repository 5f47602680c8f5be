#include "symstab/edit_distance.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace symstab {

namespace {

struct PermSearch {
  const Graph& g;
  const Graph& h;
  int n;
  std::vector<int> sigma;  // g-vertex i ↦ h-vertex sigma[i]
  std::vector<bool> used;
  int best;

  void run(int i, int cost) {
    if (cost >= best) return;
    if (i == n) {
      best = cost;
      return;
    }
    // Candidate images ordered by degree agreement, a cheap tie-breaker that
    // tends to find good incumbents early.
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
      if (!used[static_cast<std::size_t>(v)]) cand.push_back(v);
    std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
      return std::abs(h.degree(a) - g.degree(i)) < std::abs(h.degree(b) - g.degree(i));
    });
    for (int v : cand) {
      int extra = 0;
      for (int j = 0; j < i; ++j)
        if (g.adjacent(i, j) != h.adjacent(v, sigma[static_cast<std::size_t>(j)])) ++extra;
      sigma[static_cast<std::size_t>(i)] = v;
      used[static_cast<std::size_t>(v)] = true;
      run(i + 1, cost + extra);
      used[static_cast<std::size_t>(v)] = false;
    }
  }
};

}  // namespace

Rational edit_distance_exact(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) throw std::invalid_argument("edit distance needs graphs of equal order");
  const int n = g.order();
  if (n > 9) throw std::invalid_argument("edit_distance_exact supports n <= 9");
  if (n == 0) return 0;
  PermSearch s{g, h, n, std::vector<int>(static_cast<std::size_t>(n)), std::vector<bool>(static_cast<std::size_t>(n)),
               n * (n - 1) / 2 + 1};
  s.run(0, 0);
  return ratio(2L * s.best, static_cast<long>(n) * n);
}

namespace {

// Maximises Σ_{i,j ≥ 1} X_ij² over vertices of the transportation polytope.
// Every vertex has a cell that saturates a line (a leaf of its support
// forest), so shipping min(row, col) through some cell and recursing on the
// reduced margins reaches every vertex. States are memoised after sorting the
// non-clique margins, which the objective does not distinguish.
struct Transport {
  std::map<std::pair<std::vector<Rational>, std::vector<Rational>>, Rational> memo;

  static std::vector<Rational> canonical(std::vector<Rational> v) {
    Rational head = v[0];
    std::vector<Rational> rest;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] > 0) rest.push_back(v[i]);
    std::sort(rest.begin(), rest.end());
    rest.insert(rest.begin(), head);
    return rest;
  }

  Rational solve(const std::vector<Rational>& r, const std::vector<Rational>& c) {
    auto key = std::make_pair(r, c);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Rational best = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] <= 0) continue;
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] <= 0) continue;
        const Rational t = std::min(r[i], c[j]);
        auto r2 = r;
        auto c2 = c;
        r2[i] -= t;
        c2[j] -= t;
        Rational v = solve(canonical(r2), canonical(c2));
        if (i > 0 && j > 0) v += t * t;
        if (v > best) best = v;
      }
    }
    memo.emplace(std::move(key), best);
    return best;
  }
};

}  // namespace

Rational edit_distance_vectors(const PartiteVector& x, const PartiteVector& y) {
  if (x.support_size() > 8 || y.support_size() > 8) throw std::invalid_argument("edit distance supports at most 8 parts");
  Transport t;
  const Rational best = t.solve(Transport::canonical(x.weights()), Transport::canonical(y.weights()));
  Rational sq = 0;
  for (auto& v : x.parts()) sq += v * v;
  for (auto& v : y.parts()) sq += v * v;
  return sq - 2 * best;
}

}  // namespace symstab
