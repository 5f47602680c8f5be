#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symstab/canonical.hpp"
#include "symstab/graph.hpp"
#include "symstab/rational.hpp"

namespace symstab {

using Partition = std::vector<int>;  // non-increasing positive part sizes

Partition normalise_partition(Partition a);
std::vector<Partition> partitions_of(int n);
std::string partition_to_string(const Partition& a);

// Linear-combination term c·p(K_a, ·).
struct PartiteTerm {
  Rational coefficient;
  Partition parts;
};

struct Provenance {
  enum class Kind { RawTable, PartiteCombination };
  Kind kind = Kind::RawTable;
  std::vector<PartiteTerm> terms;  // PartiteCombination only
  std::string description;
};

// Arity k and γ over isomorphism classes of k-vertex graphs. Classes absent
// from `gamma()` have γ = 0.
class ObjectiveSpec {
 public:
  // p(F, ·) for an arbitrary graph F on 3..8 vertices (raw table with one entry).
  static ObjectiveSpec induced_density(const Graph& f);
  // Σ c_F p(K_{a_F}, ·). k is the largest |a_F|; terms smaller than k need k ≤ 6.
  static ObjectiveSpec partite_combination(std::vector<PartiteTerm> terms);
  static ObjectiveSpec complete_partite(const Partition& a);
  // Σ p(F, ·) over all complete partite F on k vertices.
  static ObjectiveSpec all_complete_partite_sum(int k);
  static ObjectiveSpec from_table(int k, std::map<CanonicalKey, Rational> gamma,
                                  std::string description = "raw table");

  // Mini-language: "KP 2,1,1,1" or "SUM 1*KP 3 + -1*KP 1,1,1".
  static ObjectiveSpec parse(const std::string& text);
  // γ table JSON: {"k":4,"entries":[{"edges":[[0,1],...],"gamma":"p/q"},...]}.
  static ObjectiveSpec read_table_json(const std::string& path);

  int k() const { return k_; }
  const std::map<CanonicalKey, Rational>& gamma() const { return gamma_; }
  const Rational& gamma_max() const { return gamma_max_; }
  const Provenance& provenance() const { return provenance_; }

  // Σ c_F form with c_F ≥ 0 whenever F is not a clique.
  bool symmetrisation_eligible() const;
  // All γ(F) ≥ 0.
  bool nonnegative() const;

  const Rational& gamma_of(const CanonicalKey& key) const;
  const Rational& gamma_of(const Graph& h) const;
  // γ of the labeled k-vertex graph with the given induced_code.
  const Rational& gamma_of_code(std::uint32_t code) const;
  // Integer-scaled lookup: γ(code)·scale() when available (k ≤ 6 and the
  // common denominator fits), for hot enumeration loops.
  bool has_scaled_table() const { return !scaled_.empty(); }
  std::int64_t scaled_gamma_of_code(std::uint32_t code) const { return scaled_[code]; }
  const Integer& scale() const { return scale_; }

  // γ(K_a) for every partition a of k with nonzero value.
  const std::vector<std::pair<Partition, Rational>>& partite_expansion() const { return expansion_; }

  std::string description() const { return provenance_.description; }

 private:
  void finalise();

  int k_ = 0;
  std::map<CanonicalKey, Rational> gamma_;
  Rational gamma_max_;
  Provenance provenance_;
  std::vector<Rational> dense_;            // labeled code → γ (k ≤ 6)
  std::vector<std::int64_t> scaled_;       // labeled code → γ·scale (k ≤ 6)
  Integer scale_ = 1;
  std::vector<std::pair<Partition, Rational>> expansion_;
};

struct LambdaValue {
  Rational lambda;  // normalised by C(n,k)
  Rational total;   // Λ(G)
};

LambdaValue lambda_graph(const ObjectiveSpec& spec, const Graph& g);
// Σ γ(G[X]) over k-sets X ⊇ fixed.
Rational lambda_sum_containing(const ObjectiveSpec& spec, const Graph& g, const std::vector<int>& fixed);
// Λ(G,v) = Λ(G) − Λ(G−v).
Rational Lambda_vertex(const ObjectiveSpec& spec, const Graph& g, int v);
// λ(G,v) = Λ(G,v)/C(n−1,k−1).
Rational lambda_vertex(const ObjectiveSpec& spec, const Graph& g, int v);

// Number of v(F)-subsets of V(G) inducing a copy of F.
Integer induced_count(const Graph& f, const Graph& g);

struct BruteMax {
  Rational value;
  std::vector<CanonicalKey> witnesses;  // extremal isomorphism classes, sorted
};
BruteMax brute_lambda_max(const ObjectiveSpec& spec, int n);

}  // namespace symstab
