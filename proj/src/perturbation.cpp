#include "symstab/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "symstab/density.hpp"
#include "symstab/parallel.hpp"

namespace symstab {

std::string AttachmentPattern::to_string() const {
  std::string s = "b=";
  for (std::size_t i = 1; i < b.size(); ++i) s += b[i] ? '1' : '0';
  return s + " alpha=" + symstab::to_string(alpha);
}

AttachmentPattern clone_pattern(const PartiteVector& x, int i) {
  const int m = x.support_size();
  if (i < 0 || i > m) throw std::invalid_argument("clone index outside supp*(x)");
  if (i == 0 && x.clique_mass() == 0) throw std::invalid_argument("clone index outside supp*(x)");
  AttachmentPattern p;
  p.b.assign(static_cast<std::size_t>(m) + 1, true);
  p.b[0] = false;
  if (i > 0) p.b[static_cast<std::size_t>(i)] = false;
  p.alpha = 1;
  return p;
}

AttachmentPattern pattern_from_mask(const PartiteVector& x, unsigned long mask, const Rational& alpha) {
  AttachmentPattern p;
  p.b.assign(static_cast<std::size_t>(x.support_size()) + 1, false);
  for (int i = 1; i <= x.support_size(); ++i) p.b[static_cast<std::size_t>(i)] = (mask >> (i - 1)) & 1ul;
  p.alpha = alpha;
  return normalise_pattern(x, p);
}

AttachmentPattern normalise_pattern(const PartiteVector& x, AttachmentPattern p) {
  if (p.alpha < 0 || p.alpha > 1) throw std::invalid_argument("alpha must lie in [0,1]");
  if (static_cast<int>(p.b.size()) < x.support_size() + 1) p.b.resize(static_cast<std::size_t>(x.support_size()) + 1, false);
  if (x.clique_mass() == 0) p.alpha = 1;
  return p;
}

Rational flip_gradient(const ObjectiveSpec& spec, const PartiteVector& x, int i1, int i2) {
  Rational total = 0;
  for (auto& [code, w] : pattern_weights(x, spec.k(), {i1, i2}))
    total += (spec.gamma_of_code(code) - spec.gamma_of_code(code ^ 1u)) * w;
  return total;
}

namespace {

// Sampled positions 1..k-1 carry labels; position 0 is the new vertex u.
// Key packs (code, joined clique positions s, clique positions z).
void attach_enumerate(const std::vector<int>& support, const std::vector<Rational>& w, const std::vector<bool>& b,
                      std::vector<int>& labels, std::size_t pos, const Rational& weight,
                      std::map<std::uint64_t, Rational>& out) {
  if (pos == labels.size()) {
    const int k = static_cast<int>(labels.size());
    std::uint32_t code = 0;
    std::vector<int> zeros;
    for (int j = 1; j < k; ++j) {
      const int l = labels[static_cast<std::size_t>(j)];
      if (l == 0) zeros.push_back(j);
      else if (l < static_cast<int>(b.size()) && b[static_cast<std::size_t>(l)]) code |= 1u << (j * (j - 1) / 2);
      for (int i = 1; i < j; ++i) {
        const int li = labels[static_cast<std::size_t>(i)];
        if (li != l || l == 0) code |= 1u << (j * (j - 1) / 2 + i);
      }
    }
    const int z = static_cast<int>(zeros.size());
    for (unsigned mask = 0; mask < (1u << z); ++mask) {
      std::uint32_t c = code;
      for (int t = 0; t < z; ++t)
        if ((mask >> t) & 1u) c |= 1u << (zeros[static_cast<std::size_t>(t)] * (zeros[static_cast<std::size_t>(t)] - 1) / 2);
      const std::uint64_t key = (std::uint64_t{c} << 16) | (static_cast<std::uint64_t>(__builtin_popcount(mask)) << 8) |
                                static_cast<std::uint64_t>(z);
      out[key] += weight;
    }
    return;
  }
  for (int l : support) {
    labels[pos] = l;
    attach_enumerate(support, w, b, labels, pos + 1, weight * w[static_cast<std::size_t>(l)], out);
  }
}

}  // namespace

UPoly attach_polynomial(const ObjectiveSpec& spec, const PartiteVector& x, const std::vector<bool>& b) {
  const int k = spec.k();
  const auto support = x.extended_support();
  if (std::pow(static_cast<double>(support.size()), k - 1) > kEnumerationLimit)
    throw std::invalid_argument("enumeration bound exceeded: |supp*(x)|^(k-1) > 1e7");
  for (std::size_t i = static_cast<std::size_t>(x.support_size()) + 1; i < b.size(); ++i)
    if (b[i]) throw std::invalid_argument("pattern joins a part outside supp(x)");
  const auto w = x.weights();
  auto partial = parallel_map<std::map<std::uint64_t, Rational>>(support.size(), [&](std::size_t t) {
    std::vector<int> labels(static_cast<std::size_t>(k), 0);
    std::map<std::uint64_t, Rational> m;
    if (k == 1) {
      if (t == 0) attach_enumerate(support, w, b, labels, 1, Rational(1), m);
      return m;
    }
    labels[1] = support[t];
    attach_enumerate(support, w, b, labels, 2, w[static_cast<std::size_t>(support[t])], m);
    return m;
  });
  std::map<std::uint64_t, Rational> merged;
  for (auto& m : partial)
    for (auto& [key, v] : m) merged[key] += v;
  // Σ γ(code)·weight·α^s(1−α)^(z−s).
  std::map<std::pair<int, int>, Rational> by_sz;
  for (auto& [key, v] : merged) {
    const auto code = static_cast<std::uint32_t>(key >> 16);
    const int s = static_cast<int>((key >> 8) & 0xff), z = static_cast<int>(key & 0xff);
    const Rational& g = spec.gamma_of_code(code);
    if (g != 0) by_sz[{s, z}] += g * v;
  }
  const UPoly a = UPoly::variable();
  const UPoly one_minus = UPoly(1) - a;
  UPoly result;
  for (auto& [sz, v] : by_sz) result += UPoly(v) * a.pow(static_cast<unsigned>(sz.first)) *
                                        one_minus.pow(static_cast<unsigned>(sz.second - sz.first));
  return result;
}

Rational attach_value(const ObjectiveSpec& spec, const PartiteVector& x, const AttachmentPattern& p) {
  auto q = normalise_pattern(x, p);
  return attach_polynomial(spec, x, q.b)(q.alpha);
}

namespace {
AttachmentPattern reference_clone(const PartiteVector& x) { return clone_pattern(x, x.support_size() >= 1 ? 1 : 0); }
}  // namespace

UPoly vertex_gradient_polynomial(const ObjectiveSpec& spec, const PartiteVector& x, const std::vector<bool>& b) {
  return UPoly(attach_value(spec, x, reference_clone(x))) - attach_polynomial(spec, x, b);
}

Rational vertex_gradient(const ObjectiveSpec& spec, const PartiteVector& x, const AttachmentPattern& p) {
  return attach_value(spec, x, reference_clone(x)) - attach_value(spec, x, p);
}

Rational partial_derivative(const ObjectiveSpec& spec, const PartiteVector& x, int i) {
  return Rational(spec.k()) * attach_value(spec, x, clone_pattern(x, i));
}

Rational lagrange_residual(const ObjectiveSpec& spec, const PartiteVector& x) {
  const Rational lambda = lambda_of_vector(spec, x);
  Rational worst = 0;
  for (int i : x.extended_support())
    worst = std::max(worst, symstab::abs(attach_value(spec, x, clone_pattern(x, i)) - lambda));
  return worst;
}

DiagnosticBounds compare_bounds(const ObjectiveSpec& spec, const Graph& h, const Graph& h_prime, const Rational& c) {
  if (h.order() != h_prime.order()) throw std::invalid_argument("compare_bounds: graphs of different orders");
  auto parts = complete_partite_parts(h_prime);
  if (!parts) throw std::invalid_argument("compare_bounds: H' is not complete partite");
  const int n = h.order();
  const int k = spec.k();
  // Limit vector of H': parts of size ≥ 2 in non-increasing order, singletons form V0.
  std::vector<int> order;
  for (int p = 0; p < static_cast<int>(parts->size()); ++p)
    if ((*parts)[static_cast<std::size_t>(p)].size() >= 2) order.push_back(p);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return (*parts)[static_cast<std::size_t>(a)].size() > (*parts)[static_cast<std::size_t>(b)].size(); });
  std::vector<int> index_of(static_cast<std::size_t>(n), 0);
  std::vector<Rational> xs;
  for (std::size_t r = 0; r < order.size(); ++r) {
    for (int v : (*parts)[static_cast<std::size_t>(order[r])]) index_of[static_cast<std::size_t>(v)] = static_cast<int>(r) + 1;
    xs.push_back(ratio(static_cast<long>((*parts)[static_cast<std::size_t>(order[r])].size()), n));
  }
  const PartiteVector x(xs);

  DiagnosticBounds d;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::map<std::pair<int, int>, Rational> flip_cache;
  bool first = true;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (h.adjacent(u, v) == h_prime.adjacent(u, v)) continue;
      ++d.wrong_pairs;
      ++deg[static_cast<std::size_t>(u)];
      ++deg[static_cast<std::size_t>(v)];
      auto key = std::minmax(index_of[static_cast<std::size_t>(u)], index_of[static_cast<std::size_t>(v)]);
      auto it = flip_cache.find(key);
      if (it == flip_cache.end()) it = flip_cache.emplace(key, flip_gradient(spec, x, key.first, key.second)).first;
      if (first || it->second < d.min_flip) d.min_flip = it->second;
      if (first || it->second > d.max_flip) d.max_flip = it->second;
      first = false;
    }
  d.max_degree = n ? *std::max_element(deg.begin(), deg.end()) : 0;
  d.star = d.wrong_pairs <= 1 || d.max_degree == d.wrong_pairs;
  const Rational T(d.wrong_pairs), hh(n), K(k);
  d.xi0 = K * K * T * c / (hh * hh);
  d.xi1 = 2 * spec.gamma_max() * pow(K, 4) * T * T / pow(hh, 4);
  d.xi2 = 2 * spec.gamma_max() * pow(K, 3) * T * Rational(d.max_degree) / pow(hh, 3);
  d.difference = lambda_graph(spec, h_prime).lambda - lambda_graph(spec, h).lambda;
  d.hypothesis_lower = d.wrong_pairs == 0 || d.min_flip >= c;
  d.hypothesis_upper = d.wrong_pairs == 0 || d.max_flip <= c;
  d.conclusion_i = d.difference >= d.xi0 / 2 - d.xi1 - d.xi2;
  d.conclusion_ii = d.difference >= d.xi0 / 2 - d.xi2;
  d.conclusion_iii = d.difference <= d.xi0 + d.xi1 + d.xi2;
  return d;
}

}  // namespace symstab
