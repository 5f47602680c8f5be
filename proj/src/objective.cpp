#include "symstab/objective.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "nlohmann/json.hpp"
#include "symstab/parallel.hpp"

namespace symstab {

Partition normalise_partition(Partition a) {
  if (a.empty()) throw std::invalid_argument("partition must be non-empty");
  for (int x : a)
    if (x <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

int pairs_of(int k) { return k * (k - 1) / 2; }

// All k-subsets of [0,n) in lexicographic order, starting with a given first element.
template <class F>
void for_each_combination_from(int n, int k, int first, F&& fn) {
  std::vector<int> c(static_cast<std::size_t>(k));
  c[0] = first;
  if (k == 1) {
    fn(c);
    return;
  }
  for (int i = 1; i < k; ++i) c[i] = first + i;
  if (c[k - 1] >= n) return;
  for (;;) {
    fn(c);
    int i = k - 1;
    while (i >= 1 && c[i] == n - k + i) --i;
    if (i == 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  if (n >= 1) partitions_rec(n, n, cur, out);
  return out;
}

std::string partition_to_string(const Partition& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s;
}

ObjectiveSpec ObjectiveSpec::induced_density(const Graph& f) {
  if (f.order() < 3 || f.order() > kMaxCanonicalOrder)
    throw std::invalid_argument("p(F,·) needs 3 ≤ v(F) ≤ 8");
  std::map<CanonicalKey, Rational> gamma{{canonical_key(f), Rational(1)}};
  ObjectiveSpec spec;
  spec.k_ = f.order();
  spec.gamma_ = std::move(gamma);
  spec.provenance_.kind = Provenance::Kind::RawTable;
  spec.provenance_.description = "p(F) for F with key " + canonical_key(f).to_string();
  // A complete partite F is also recorded in Σ c_F form.
  if (auto shape = complete_partite_shape_of(f)) {
    spec.provenance_.kind = Provenance::Kind::PartiteCombination;
    spec.provenance_.terms = {PartiteTerm{1, shape->part_sizes}};
    spec.provenance_.description = "KP " + partition_to_string(shape->part_sizes);
  }
  spec.finalise();
  return spec;
}

ObjectiveSpec ObjectiveSpec::partite_combination(std::vector<PartiteTerm> terms) {
  if (terms.empty()) throw std::invalid_argument("empty linear combination");
  std::map<Partition, Rational> merged;
  for (auto& t : terms) merged[normalise_partition(t.parts)] += t.coefficient;
  int k = 0;
  for (auto& [a, c] : merged) k = std::max(k, std::accumulate(a.begin(), a.end(), 0));
  if (k < 3 || k > kMaxCanonicalOrder) throw std::invalid_argument("objective arity must lie in [3,8]");
  ObjectiveSpec spec;
  spec.k_ = k;
  std::vector<std::pair<Graph, Rational>> smaller;
  for (auto& [a, c] : merged) {
    if (c == 0) continue;
    Graph f = Graph::complete_partite(a);
    if (f.order() == k)
      spec.gamma_[canonical_key(f)] += c;
    else
      smaller.emplace_back(f, c);
  }
  if (!smaller.empty()) {
    if (k > 6) throw std::invalid_argument("mixed-size combinations need k ≤ 6");
    // Expand γ(H) = Σ c p(F,H) over the isomorphism classes of k-vertex H.
    std::map<CanonicalKey, Graph> classes;
    for (std::uint32_t code = 0; code < (1u << pairs_of(k)); ++code) {
      CanonicalKey key = canonical_key_of_code(k, code);
      if (!classes.count(key)) classes.emplace(key, key.to_graph());
    }
    for (auto& [key, h] : classes)
      for (auto& [f, c] : smaller) {
        Integer count = induced_count(f, h);
        if (count != 0) spec.gamma_[key] += c * Rational(count) / Rational(binomial(k, f.order()));
      }
  }
  spec.provenance_.kind = Provenance::Kind::PartiteCombination;
  std::string desc;
  for (auto& [a, c] : merged) {
    spec.provenance_.terms.push_back(PartiteTerm{c, a});
    desc += (desc.empty() ? "" : " + ") + to_string(c) + "*KP " + partition_to_string(a);
  }
  spec.provenance_.description = merged.size() == 1 && merged.begin()->second == 1
                                     ? "KP " + partition_to_string(merged.begin()->first)
                                     : "SUM " + desc;
  spec.finalise();
  return spec;
}

ObjectiveSpec ObjectiveSpec::complete_partite(const Partition& a) {
  return partite_combination({PartiteTerm{1, a}});
}

ObjectiveSpec ObjectiveSpec::all_complete_partite_sum(int k) {
  std::vector<PartiteTerm> terms;
  for (auto& a : partitions_of(k)) terms.push_back(PartiteTerm{1, a});
  return partite_combination(std::move(terms));
}

ObjectiveSpec ObjectiveSpec::from_table(int k, std::map<CanonicalKey, Rational> gamma,
                                        std::string description) {
  if (k < 3 || k > kMaxCanonicalOrder) throw std::invalid_argument("objective arity must lie in [3,8]");
  for (auto& [key, v] : gamma)
    if (key.n != k) throw std::invalid_argument("γ table entry has the wrong order");
  ObjectiveSpec spec;
  spec.k_ = k;
  spec.gamma_ = std::move(gamma);
  spec.provenance_.description = std::move(description);
  spec.finalise();
  return spec;
}

namespace {

std::string trim(std::string s) {
  auto ws = [](unsigned char ch) { return std::isspace(ch) != 0; };
  while (!s.empty() && ws(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && ws(s[i])) ++i;
  return s.substr(i);
}

Partition parse_kp(const std::string& text) {
  std::string t = trim(text);
  if (t.rfind("KP", 0) != 0) throw std::invalid_argument("expected 'KP a1,a2,...' in '" + t + "'");
  std::string list = trim(t.substr(2));
  if (list.empty()) throw std::invalid_argument("KP needs part sizes");
  Partition a;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad part size '" + item + "'");
    a.push_back(std::stoi(item));
  }
  return normalise_partition(a);
}

}  // namespace

ObjectiveSpec ObjectiveSpec::parse(const std::string& text) {
  std::string t = trim(text);
  if (t.rfind("KP", 0) == 0) return complete_partite(parse_kp(t));
  if (t.rfind("SUM", 0) != 0) throw std::invalid_argument("objective must start with 'KP' or 'SUM'");
  std::string body = t.substr(3);
  // Split on '+' that separates terms (a '+' directly after '*' or at a coefficient start is a sign).
  std::vector<std::string> pieces;
  std::string cur;
  for (std::size_t i = 0; i < body.size(); ++i) {
    char ch = body[i];
    if (ch == '+' && !trim(cur).empty() && trim(cur).back() != '*') {
      pieces.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  pieces.push_back(cur);
  std::vector<PartiteTerm> terms;
  for (auto& piece : pieces) {
    std::string p = trim(piece);
    auto star = p.find('*');
    if (star == std::string::npos) throw std::invalid_argument("term '" + p + "' needs 'c*KP ...'");
    terms.push_back(PartiteTerm{parse_rational(trim(p.substr(0, star))), parse_kp(p.substr(star + 1))});
  }
  return partite_combination(std::move(terms));
}

ObjectiveSpec ObjectiveSpec::read_table_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open γ table " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("γ table JSON: ") + e.what());
  }
  if (!j.contains("k") || !j.contains("entries")) throw std::invalid_argument("γ table needs 'k' and 'entries'");
  int k = j.at("k").get<int>();
  std::map<CanonicalKey, Rational> gamma;
  for (auto& e : j.at("entries")) {
    Graph h(k);
    for (auto& edge : e.at("edges")) h.set_edge(edge.at(0).get<int>(), edge.at(1).get<int>(), true);
    CanonicalKey key = canonical_key(h);
    if (gamma.count(key)) throw std::invalid_argument("γ table lists an isomorphism class twice");
    gamma[key] = parse_rational(e.at("gamma").get<std::string>());
  }
  return from_table(k, std::move(gamma), "table " + path);
}

void ObjectiveSpec::finalise() {
  for (auto it = gamma_.begin(); it != gamma_.end();)
    it = it->second == 0 ? gamma_.erase(it) : std::next(it);
  gamma_max_ = 0;
  for (auto& [key, v] : gamma_) gamma_max_ = std::max(gamma_max_, abs(v));
  if (k_ <= 6) {
    const std::uint32_t codes = 1u << pairs_of(k_);
    dense_.assign(codes, Rational(0));
    Integer lcm = 1;
    for (auto& [key, v] : gamma_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    bool fits = true;
    for (std::uint32_t code = 0; code < codes; ++code) {
      dense_[code] = gamma_of(canonical_key_of_code(k_, code));
    }
    std::vector<std::int64_t> scaled(codes, 0);
    for (std::uint32_t code = 0; code < codes && fits; ++code) {
      Rational s = dense_[code] * lcm;
      // Leave headroom so sums over up to 2^20 subsets cannot overflow.
      if (abs(s) > Rational(std::numeric_limits<std::int64_t>::max() >> 21)) {
        fits = false;
        break;
      }
      scaled[code] = s.get_num().get_si();
    }
    if (fits) {
      scaled_ = std::move(scaled);
      scale_ = lcm;
    }
  }
  expansion_.clear();
  for (auto& a : partitions_of(k_)) {
    const Rational& g = gamma_of(canonical_key(Graph::complete_partite(a)));
    if (g != 0) expansion_.emplace_back(a, g);
  }
}

bool ObjectiveSpec::symmetrisation_eligible() const {
  if (provenance_.kind != Provenance::Kind::PartiteCombination) return false;
  for (auto& t : provenance_.terms) {
    bool clique = std::all_of(t.parts.begin(), t.parts.end(), [](int x) { return x == 1; });
    if (!clique && t.coefficient < 0) return false;
  }
  return true;
}

bool ObjectiveSpec::nonnegative() const {
  return std::all_of(gamma_.begin(), gamma_.end(), [](auto& kv) { return kv.second >= 0; });
}

const Rational& ObjectiveSpec::gamma_of(const CanonicalKey& key) const {
  static const Rational zero(0);
  auto it = gamma_.find(key);
  return it == gamma_.end() ? zero : it->second;
}

const Rational& ObjectiveSpec::gamma_of(const Graph& h) const {
  if (h.order() != k_) throw std::invalid_argument("γ takes k-vertex graphs");
  return gamma_of(canonical_key(h));
}

const Rational& ObjectiveSpec::gamma_of_code(std::uint32_t code) const {
  if (!dense_.empty()) return dense_[code];
  return gamma_of(canonical_key_of_code(k_, code));
}

namespace {

// Σ γ over k-sets X of V(g) with X ⊇ fixed; the fixed vertices occupy the first positions.
Rational sum_over_sets(const ObjectiveSpec& spec, const Graph& g, const std::vector<int>& fixed) {
  const int n = g.order(), k = spec.k();
  const int f = static_cast<int>(fixed.size());
  if (f > k) throw std::invalid_argument("more fixed vertices than k");
  std::vector<int> others;
  std::vector<bool> is_fixed(static_cast<std::size_t>(n), false);
  for (int v : fixed) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");
    if (is_fixed[v]) throw std::invalid_argument("repeated fixed vertex");
    is_fixed[v] = true;
  }
  for (int v = 0; v < n; ++v)
    if (!is_fixed[v]) others.push_back(v);
  const int m = static_cast<int>(others.size()), r = k - f;
  if (r > m) return 0;
  const bool scaled = spec.has_scaled_table();
  if (r == 0) {
    std::vector<int> set = fixed;
    return spec.gamma_of_code(g.induced_code(set));
  }
  const int firsts = m - r + 1;
  std::vector<Integer> partial_int(static_cast<std::size_t>(firsts));
  std::vector<Rational> partial(static_cast<std::size_t>(firsts));
  parallel_for(static_cast<std::size_t>(firsts), [&](std::size_t first) {
    std::vector<int> set(static_cast<std::size_t>(k));
    std::copy(fixed.begin(), fixed.end(), set.begin());
    __int128 acc = 0;
    Rational racc = 0;
    for_each_combination_from(m, r, static_cast<int>(first), [&](const std::vector<int>& c) {
      for (int i = 0; i < r; ++i) set[f + i] = others[c[i]];
      std::uint32_t code = g.induced_code(set);
      if (scaled)
        acc += spec.scaled_gamma_of_code(code);
      else
        racc += spec.gamma_of_code(code);
    });
    if (scaled) {
      // __int128 → Integer via two 64-bit halves.
      bool neg = acc < 0;
      unsigned __int128 u = neg ? static_cast<unsigned __int128>(-acc) : static_cast<unsigned __int128>(acc);
      Integer hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~std::uint64_t{0}));
      Integer v = (hi << 64) + lo;
      partial_int[first] = neg ? Integer(-v) : v;
    } else {
      partial[first] = racc;
    }
  });
  if (scaled) {
    Integer total = 0;
    for (auto& v : partial_int) total += v;
    return Rational(total) / Rational(spec.scale());
  }
  Rational total = 0;
  for (auto& v : partial) total += v;
  return total;
}

}  // namespace

LambdaValue lambda_graph(const ObjectiveSpec& spec, const Graph& g) {
  if (g.order() < spec.k()) throw std::invalid_argument("lambda_graph: v(G) < k");
  Rational total = sum_over_sets(spec, g, {});
  return LambdaValue{total / Rational(binomial(g.order(), spec.k())), total};
}

Rational lambda_sum_containing(const ObjectiveSpec& spec, const Graph& g, const std::vector<int>& fixed) {
  return sum_over_sets(spec, g, fixed);
}

Rational Lambda_vertex(const ObjectiveSpec& spec, const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("lambda_vertex: vertex out of range");
  return sum_over_sets(spec, g, {v});
}

Rational lambda_vertex(const ObjectiveSpec& spec, const Graph& g, int v) {
  if (g.order() < spec.k()) throw std::invalid_argument("lambda_vertex: v(G) < k");
  return Lambda_vertex(spec, g, v) / Rational(binomial(g.order() - 1, spec.k() - 1));
}

Integer induced_count(const Graph& f, const Graph& g) {
  const int m = f.order(), n = g.order();
  if (m > kMaxCanonicalOrder) throw std::invalid_argument("induced_count: v(F) ≤ 8 required");
  if (m > n) throw std::invalid_argument("induced_count: v(F) > v(G)");
  if (binomial(n, m) > Integer(100000000)) throw std::invalid_argument("induced_count: C(v(G),v(F)) exceeds 10^8");
  if (m == 0) return 1;
  const CanonicalKey target = canonical_key(f);
  const int firsts = n - m + 1;
  std::vector<long long> partial(static_cast<std::size_t>(firsts), 0);
  parallel_for(static_cast<std::size_t>(firsts), [&](std::size_t first) {
    std::unordered_map<std::uint32_t, bool> memo;
    long long count = 0;
    for_each_combination_from(n, m, static_cast<int>(first), [&](const std::vector<int>& c) {
      std::uint32_t code = g.induced_code(c);
      auto it = memo.find(code);
      if (it == memo.end()) it = memo.emplace(code, canonical_key_of_code(m, code) == target).first;
      count += it->second;
    });
    partial[first] = count;
  });
  Integer total = 0;
  for (long long c : partial) total += Integer(static_cast<long>(c));
  return total;
}

BruteMax brute_lambda_max(const ObjectiveSpec& spec, int n) {
  const int k = spec.k();
  if (n > 7) throw std::invalid_argument("brute_lambda_max: n ≤ 7 required");
  if (k > n) throw std::invalid_argument("brute_lambda_max: k > n");
  const int P = pairs_of(n);
  // Global pair-bit positions for every k-subset.
  std::vector<std::vector<int>> subset_bits;
  for (int first = 0; first <= n - k; ++first)
    for_each_combination_from(n, k, first, [&](const std::vector<int>& c) {
      std::vector<int> bits;
      for (int j = 1; j < k; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(c[j] * (c[j] - 1) / 2 + c[i]);
      subset_bits.push_back(std::move(bits));
    });
  const bool scaled = spec.has_scaled_table();
  auto code_of = [&](std::uint32_t graph_code, const std::vector<int>& bits) {
    std::uint32_t code = 0;
    for (std::size_t t = 0; t < bits.size(); ++t) code |= ((graph_code >> bits[t]) & 1u) << t;
    return code;
  };
  const int high_bits = std::min(P, 6);
  const std::uint32_t chunks = 1u << high_bits;
  const std::uint32_t per_chunk = 1u << (P - high_bits);
  struct ChunkResult {
    bool any = false;
    Rational best;
    std::set<CanonicalKey> keys;
  };
  std::vector<ChunkResult> results(chunks);
  parallel_for(chunks, [&](std::size_t chunk) {
    ChunkResult& res = results[chunk];
    long long best_scaled = std::numeric_limits<long long>::min();
    std::vector<std::uint32_t> best_codes;
    for (std::uint32_t low = 0; low < per_chunk; ++low) {
      std::uint32_t gcode = (static_cast<std::uint32_t>(chunk) << (P - high_bits)) | low;
      if (scaled) {
        long long s = 0;
        for (auto& bits : subset_bits) s += spec.scaled_gamma_of_code(code_of(gcode, bits));
        if (s > best_scaled) {
          best_scaled = s;
          best_codes.assign(1, gcode);
        } else if (s == best_scaled) {
          best_codes.push_back(gcode);
        }
      } else {
        Rational s = 0;
        for (auto& bits : subset_bits) s += spec.gamma_of_code(code_of(gcode, bits));
        if (!res.any || s > res.best) {
          res.any = true;
          res.best = s;
          best_codes.assign(1, gcode);
        } else if (s == res.best) {
          best_codes.push_back(gcode);
        }
      }
    }
    if (scaled) {
      res.any = true;
      res.best = Rational(Integer(static_cast<long>(best_scaled))) / Rational(spec.scale());
    }
    for (std::uint32_t gcode : best_codes) res.keys.insert(canonical_key_of_code(n, gcode));
  });
  BruteMax out;
  bool any = false;
  std::set<CanonicalKey> keys;
  for (auto& r : results) {
    if (!r.any) continue;
    if (!any || r.best > out.value) {
      out.value = r.best;
      keys = r.keys;
      any = true;
    } else if (r.best == out.value) {
      keys.insert(r.keys.begin(), r.keys.end());
    }
  }
  out.value /= Rational(binomial(n, k));
  out.witnesses.assign(keys.begin(), keys.end());
  return out;
}

}  // namespace symstab
