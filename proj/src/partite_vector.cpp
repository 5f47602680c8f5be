#include "symstab/partite_vector.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "nlohmann/json.hpp"

namespace symstab {

PartiteVector::PartiteVector(std::vector<Rational> parts) : parts_(std::move(parts)) {
  Rational sum = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partite vector entries must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partite vector entries must be non-increasing");
    sum += parts_[i];
  }
  if (sum > 1) throw std::invalid_argument("partite vector entries sum above 1");
  x0_ = 1 - sum;
}

PartiteVector PartiteVector::uniform(int parts) {
  if (parts <= 0) throw std::invalid_argument("uniform needs at least one part");
  return PartiteVector(std::vector<Rational>(static_cast<std::size_t>(parts), ratio(1, parts)));
}

PartiteVector PartiteVector::from_unsorted(std::vector<Rational> parts) {
  parts.erase(std::remove_if(parts.begin(), parts.end(), [](const Rational& q) { return q == 0; }), parts.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return PartiteVector(std::move(parts));
}

Rational PartiteVector::entry(int i) const {
  if (i == 0) return x0_;
  if (i < 0) throw std::out_of_range("negative index");
  return i <= support_size() ? parts_[static_cast<std::size_t>(i - 1)] : Rational(0);
}

std::vector<int> PartiteVector::extended_support() const {
  std::vector<int> s;
  if (x0_ > 0) s.push_back(0);
  for (int i = 1; i <= support_size(); ++i) s.push_back(i);
  return s;
}

std::vector<Rational> PartiteVector::weights() const {
  std::vector<Rational> w;
  w.push_back(x0_);
  w.insert(w.end(), parts_.begin(), parts_.end());
  return w;
}

Rational PartiteVector::min_entry() const { return parts_.empty() ? Rational(0) : parts_.back(); }

std::string PartiteVector::to_string() const {
  std::string s = "x0=" + symstab::to_string(x0_) + " parts=(";
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + symstab::to_string(parts_[i]);
  return s + ")";
}

namespace {

Integer floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

}  // namespace

RealisationLayout realisation_layout(int n, const PartiteVector& x) {
  if (n < 1) throw std::invalid_argument("realisation needs n ≥ 1");
  const int m = x.support_size();
  RealisationLayout out;
  out.part_sizes.assign(static_cast<std::size_t>(m), 0);
  if (x.clique_mass() == 0) {
    // Largest remainder: floors first, then one extra vertex to the largest
    // fractional parts (ties towards the lower index).
    int assigned = 0;
    std::vector<std::pair<Rational, int>> remainders;
    for (int i = 0; i < m; ++i) {
      Rational target = x.parts()[i] * n;
      Integer f = floor_of(target);
      out.part_sizes[i] = static_cast<int>(f.get_si());
      assigned += out.part_sizes[i];
      remainders.emplace_back(target - Rational(f), i);
    }
    std::stable_sort(remainders.begin(), remainders.end(),
                     [](auto& a, auto& b) { return a.first > b.first; });
    for (int j = 0; j < n - assigned; ++j) ++out.part_sizes[remainders[static_cast<std::size_t>(j)].second];
  } else {
    int used = 0;
    for (int i = 0; i < m; ++i) {
      Rational target = x.parts()[i] * n;
      if (target >= 2) {
        out.part_sizes[i] = static_cast<int>(floor_of(target).get_si());
        used += out.part_sizes[i];
      }
    }
    out.clique_size = n - used;
  }
  std::vector<int> sizes;
  for (int s : out.part_sizes)
    if (s > 0) sizes.push_back(s);
  // A realised part of size 1 is indistinguishable from a clique vertex.
  for (int i = 0; i < m; ++i)
    if (out.part_sizes[i] == 1) {
      out.part_sizes[i] = 0;
      ++out.clique_size;
    }
  sizes.insert(sizes.end(), static_cast<std::size_t>(out.clique_size) - static_cast<std::size_t>(std::count(sizes.begin(), sizes.end(), 1)), 1);
  out.shape = make_shape(std::move(sizes));
  return out;
}

CompletePartiteShape realisation(int n, const PartiteVector& x) { return realisation_layout(n, x).shape; }

Rational elementary_symmetric(const PartiteVector& x, const SymmetricIndex& idx) {
  for (int d : idx.exponents)
    if (d <= 0) throw std::invalid_argument("symmetric index exponents must be positive");
  std::vector<Rational> vals;
  for (int i = 1; i <= x.support_size(); ++i)
    if (std::find(idx.excluded.begin(), idx.excluded.end(), i) == idx.excluded.end()) vals.push_back(x.entry(i));
  // DP over indices; state = multiset of exponents already matched, encoded by
  // counts per distinct exponent. The DP counts unordered assignments, so the
  // ordered sum is that times Π mult!.
  std::map<int, int> mult;
  for (int d : idx.exponents) ++mult[d];
  std::vector<int> sizes, caps;
  for (auto& [d, c] : mult) {
    sizes.push_back(d);
    caps.push_back(c);
  }
  std::vector<int> radix(sizes.size() + 1, 1);
  for (std::size_t j = 0; j < sizes.size(); ++j) radix[j + 1] = radix[j] * (caps[j] + 1);
  const int states = radix.back();
  std::vector<Rational> dp(static_cast<std::size_t>(states), Rational(0));
  dp[0] = 1;
  for (auto& v : vals) {
    std::vector<Rational> next = dp;
    for (int s = 0; s < states; ++s) {
      if (dp[s] == 0) continue;
      for (std::size_t j = 0; j < sizes.size(); ++j) {
        int used = (s / radix[j]) % (caps[j] + 1);
        if (used < caps[j]) next[s + radix[j]] += dp[s] * pow(v, static_cast<unsigned>(sizes[j]));
      }
    }
    dp = std::move(next);
  }
  Rational result = dp[states - 1];
  for (int c : caps) result *= Rational(factorial(c));
  return result;
}

std::string partite_vector_to_json(const PartiteVector& x) {
  nlohmann::json j;
  j["x0"] = to_string(x.clique_mass());
  j["parts"] = nlohmann::json::array();
  for (auto& p : x.parts()) j["parts"].push_back(to_string(p));
  return j.dump();
}

PartiteVector partite_vector_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("vector JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("parts") || !j["parts"].is_array())
    throw std::invalid_argument("vector JSON needs a 'parts' array");
  std::vector<Rational> parts;
  for (auto& p : j["parts"]) {
    if (!p.is_string()) throw std::invalid_argument("vector entries must be \"p/q\" strings");
    parts.push_back(parse_rational(p.get<std::string>()));
  }
  PartiteVector x(std::move(parts));
  if (j.contains("x0")) {
    if (!j["x0"].is_string()) throw std::invalid_argument("x0 must be a \"p/q\" string");
    if (parse_rational(j["x0"].get<std::string>()) != x.clique_mass())
      throw std::invalid_argument("x0 inconsistent with 1 − Σ parts");
  }
  return x;
}

}  // namespace symstab
