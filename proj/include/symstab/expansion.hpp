#pragma once

// Closed-form evaluation of λ(x) through complete partite densities, generic
// over the scalar type (Rational for exact values, double and Dual for search).
// The clique mass x0 is an independent variable here, so the result is the
// homogeneous degree-k polynomial whose partial derivatives give k·λ(x,clone).

#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "symstab/objective.hpp"
#include "symstab/rational.hpp"

namespace symstab {

// Forward-mode dual number with up to 16 tangent directions.
struct Dual {
  static constexpr int kMaxDirections = 16;
  double v = 0;
  std::array<double, kMaxDirections> d{};
  int n = 0;

  Dual() = default;
  Dual(double value) : v(value) {}  // NOLINT
  static Dual seed(double value, int directions, int index) {
    Dual r(value);
    r.n = directions;
    r.d[static_cast<std::size_t>(index)] = 1;
    return r;
  }
};

inline Dual operator+(const Dual& a, const Dual& b) {
  Dual r(a.v + b.v);
  r.n = std::max(a.n, b.n);
  for (int i = 0; i < r.n; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}
inline Dual operator*(const Dual& a, const Dual& b) {
  Dual r(a.v * b.v);
  r.n = std::max(a.n, b.n);
  for (int i = 0; i < r.n; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return r;
}
inline Dual& operator+=(Dual& a, const Dual& b) { return a = a + b; }
inline Dual& operator*=(Dual& a, const Dual& b) { return a = a * b; }

template <class S>
S scalar_from(const Rational& q) {
  if constexpr (std::is_same_v<S, Rational>) return q;
  else return S(q.get_d());
}

template <class S>
S ipow(const S& base, int e) {
  S r = scalar_from<S>(1);
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

// Σ over unordered injective maps of the blocks of D (block sizes, any order)
// into the entries of `vals`, of Π vals[i]^size. Blocks of equal size are
// indistinguishable.
template <class S>
S unordered_symmetric(const std::vector<S>& vals, const std::vector<int>& blocks) {
  if (blocks.empty()) return scalar_from<S>(1);
  std::map<int, int> mult;
  for (int d : blocks) ++mult[d];
  std::vector<int> sizes, caps;
  for (auto& [d, c] : mult) {
    sizes.push_back(d);
    caps.push_back(c);
  }
  std::vector<int> radix(sizes.size() + 1, 1);
  for (std::size_t j = 0; j < sizes.size(); ++j) radix[j + 1] = radix[j] * (caps[j] + 1);
  const int states = radix.back();
  std::vector<S> dp(static_cast<std::size_t>(states), scalar_from<S>(0));
  std::vector<bool> live(static_cast<std::size_t>(states), false);
  dp[0] = scalar_from<S>(1);
  live[0] = true;
  std::vector<S> powers(sizes.size());
  for (const S& v : vals) {
    for (std::size_t j = 0; j < sizes.size(); ++j) powers[j] = ipow(v, sizes[j]);
    // Descending state order lets the update run in place (each entry used once).
    for (int s = states - 1; s >= 0; --s) {
      if (!live[static_cast<std::size_t>(s)]) continue;
      for (std::size_t j = 0; j < sizes.size(); ++j) {
        int used = (s / radix[j]) % (caps[j] + 1);
        if (used < caps[j]) {
          auto t = static_cast<std::size_t>(s + radix[j]);
          dp[t] = dp[t] + dp[static_cast<std::size_t>(s)] * powers[j];
          live[t] = true;
        }
      }
    }
  }
  return dp[static_cast<std::size_t>(states - 1)];
}

// p(K_a, x) with x0 treated as a free variable:
// C(k; a) · Σ_s x0^s / s! · U(a with s singleton blocks removed).
template <class S>
S partite_density(const Partition& a, const S& x0, const std::vector<S>& parts) {
  int k = 0, singles = 0;
  for (int v : a) {
    k += v;
    if (v == 1) ++singles;
  }
  Integer multinomial = factorial(k);
  for (int v : a) multinomial /= factorial(v);
  std::vector<int> big;
  for (int v : a)
    if (v >= 2) big.push_back(v);
  S total = scalar_from<S>(0);
  S x0_pow = scalar_from<S>(1);
  for (int s = 0; s <= singles; ++s) {
    std::vector<int> blocks = big;
    blocks.insert(blocks.end(), static_cast<std::size_t>(singles - s), 1);
    S u = unordered_symmetric(parts, blocks);
    total = total + x0_pow * u * scalar_from<S>(Rational(1) / Rational(factorial(s)));
    x0_pow = x0_pow * x0;
  }
  return total * scalar_from<S>(Rational(multinomial));
}

// λ(x) = Σ_a γ(K_a) p(K_a, x); every sampled pattern is complete partite.
template <class S>
S lambda_expansion(const ObjectiveSpec& spec, const S& x0, const std::vector<S>& parts) {
  S total = scalar_from<S>(0);
  for (auto& [a, g] : spec.partite_expansion()) total = total + scalar_from<S>(g) * partite_density(a, x0, parts);
  return total;
}

}  // namespace symstab
