#include "symstab/density.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "symstab/expansion.hpp"
#include "symstab/parallel.hpp"

namespace symstab {

std::uint32_t pattern_code(const std::vector<int>& labels) {
  std::uint32_t code = 0;
  const int k = static_cast<int>(labels.size());
  for (int j = 1; j < k; ++j)
    for (int i = 0; i < j; ++i)
      if (labels[i] != labels[j] || labels[i] == 0) code |= 1u << (j * (j - 1) / 2 + i);
  return code;
}

namespace {

void check_budget(const PartiteVector& x, int free_positions) {
  double size = std::pow(static_cast<double>(x.extended_support().size()), free_positions);
  if (size > kEnumerationLimit) throw std::invalid_argument("enumeration bound exceeded: |supp*(x)|^k > 1e7");
}

void enumerate(const std::vector<int>& support, const std::vector<Rational>& w, std::vector<int>& labels,
               std::size_t pos, const Rational& weight, std::unordered_map<std::uint32_t, Rational>& out) {
  if (pos == labels.size()) {
    out[pattern_code(labels)] += weight;
    return;
  }
  for (int l : support) {
    labels[pos] = l;
    enumerate(support, w, labels, pos + 1, weight * w[static_cast<std::size_t>(l)], out);
  }
}

}  // namespace

std::unordered_map<std::uint32_t, Rational> pattern_weights(const PartiteVector& x, int k,
                                                           const std::vector<int>& fixed) {
  if (k < 1 || k > 8) throw std::invalid_argument("pattern arity must be in 1..8");
  if (static_cast<int>(fixed.size()) > k) throw std::invalid_argument("too many fixed positions");
  const auto support = x.extended_support();
  for (int f : fixed)
    if (std::find(support.begin(), support.end(), f) == support.end())
      throw std::invalid_argument("fixed label outside supp*(x)");
  const int free = k - static_cast<int>(fixed.size());
  check_budget(x, free);
  const auto w = x.weights();
  std::vector<int> labels(static_cast<std::size_t>(k));
  std::copy(fixed.begin(), fixed.end(), labels.begin());
  if (free == 0) return {{pattern_code(labels), Rational(1)}};
  // Split on the first free label; partial maps merge in support order.
  auto partial = parallel_map<std::unordered_map<std::uint32_t, Rational>>(support.size(), [&](std::size_t t) {
    std::vector<int> local = labels;
    std::unordered_map<std::uint32_t, Rational> m;
    const int l = support[t];
    local[fixed.size()] = l;
    enumerate(support, w, local, fixed.size() + 1, w[static_cast<std::size_t>(l)], m);
    return m;
  });
  std::unordered_map<std::uint32_t, Rational> out;
  for (auto& m : partial)
    for (auto& [c, v] : m) out[c] += v;
  return out;
}

Rational lambda_of_vector(const ObjectiveSpec& spec, const PartiteVector& x) {
  Rational total = 0;
  for (auto& [code, weight] : pattern_weights(x, spec.k())) total += spec.gamma_of_code(code) * weight;
  return total;
}

Rational density_formula(const Partition& a, const PartiteVector& x) {
  if (a.empty()) throw std::invalid_argument("empty partition");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && a[i] > a[i - 1]) throw std::invalid_argument("partition must be non-increasing");
  }
  return partite_density<Rational>(a, x.clique_mass(), x.parts());
}

Rational lambda_closed_form(const ObjectiveSpec& spec, const PartiteVector& x) {
  return lambda_expansion<Rational>(spec, x.clique_mass(), x.parts());
}

double lambda_double(const ObjectiveSpec& spec, double x0, const std::vector<double>& parts) {
  return lambda_expansion<double>(spec, x0, parts);
}

double lambda_gradient(const ObjectiveSpec& spec, double x0, const std::vector<double>& parts,
                       std::vector<double>& gradient) {
  const int dims = static_cast<int>(parts.size()) + 1;
  if (dims > Dual::kMaxDirections) throw std::invalid_argument("too many coordinates for gradient");
  std::vector<Dual> p;
  for (std::size_t i = 0; i < parts.size(); ++i) p.push_back(Dual::seed(parts[i], dims, static_cast<int>(i) + 1));
  Dual r = lambda_expansion<Dual>(spec, Dual::seed(x0, dims, 0), p);
  gradient.assign(static_cast<std::size_t>(dims), 0.0);
  for (int i = 0; i < dims && i < r.n; ++i) gradient[static_cast<std::size_t>(i)] = r.d[static_cast<std::size_t>(i)];
  return r.v;
}

Integer count_partite(const Partition& a, const CompletePartiteShape& shape) {
  // DP over G-parts; the state is how many F-parts of each distinct size are
  // still unplaced. Each G-part hosts at most one F-part (vertices of one
  // G-part are pairwise non-adjacent, so they lie in a single F-part).
  std::map<int, int> mult;
  for (int v : a) ++mult[v];
  std::vector<int> sizes, caps;
  for (auto& [s, c] : mult) {
    sizes.push_back(s);
    caps.push_back(c);
  }
  std::vector<int> radix(sizes.size() + 1, 1);
  for (std::size_t j = 0; j < sizes.size(); ++j) radix[j + 1] = radix[j] * (caps[j] + 1);
  const int states = radix.back();
  std::vector<Integer> dp(static_cast<std::size_t>(states), Integer(0));
  dp[0] = 1;
  std::map<int, long> part_counts;
  for (int p : shape.part_sizes) ++part_counts[p];
  for (auto& [psize, count] : part_counts) {
    for (long rep = 0; rep < count; ++rep) {
      for (int s = states - 1; s >= 0; --s) {
        if (dp[static_cast<std::size_t>(s)] == 0) continue;
        for (std::size_t j = 0; j < sizes.size(); ++j) {
          int used = (s / radix[j]) % (caps[j] + 1);
          if (used < caps[j] && sizes[j] <= psize)
            dp[static_cast<std::size_t>(s + radix[j])] += dp[static_cast<std::size_t>(s)] * binomial(psize, sizes[j]);
        }
      }
    }
  }
  return dp[static_cast<std::size_t>(states - 1)];
}

}  // namespace symstab
