#pragma once

#include <string>
#include <vector>

#include "symstab/graph.hpp"
#include "symstab/rational.hpp"

namespace symstab {

// Finitely supported point of the partite limit space: non-increasing positive
// parts x_1 ≥ x_2 ≥ ... with Σ x_i ≤ 1 and clique mass x0 = 1 − Σ x_i.
class PartiteVector {
 public:
  PartiteVector() : x0_(1) {}  // the zero vector: all mass on the clique
  explicit PartiteVector(std::vector<Rational> parts);
  static PartiteVector uniform(int parts);
  // Sorts and drops zeros before validating.
  static PartiteVector from_unsorted(std::vector<Rational> parts);

  const std::vector<Rational>& parts() const { return parts_; }
  const Rational& clique_mass() const { return x0_; }
  int support_size() const { return static_cast<int>(parts_.size()); }
  // x_i for i ≥ 1 (1-based, zero outside the support); x_0 is the clique mass.
  Rational entry(int i) const;
  // supp*(x): 0 (if x0 > 0) followed by 1..m.
  std::vector<int> extended_support() const;
  // Weights indexed 0..m with weight[0] = x0.
  std::vector<Rational> weights() const;
  Rational min_entry() const;

  bool operator==(const PartiteVector&) const = default;
  std::string to_string() const;

 private:
  std::vector<Rational> parts_;
  Rational x0_;
};

// Exponent tuple d and excluded index set I for S_d^I.
struct SymmetricIndex {
  std::vector<int> exponents;
  std::vector<int> excluded;
};

// G_{n,x}.
CompletePartiteShape realisation(int n, const PartiteVector& x);

// Index of the part that realises x_i (i ≥ 1) in realisation(n,x), or -1 if that
// entry was absorbed into V0. Parts in the shape are ordered as in x.
struct RealisationLayout {
  std::vector<int> part_sizes;  // |V_1|,...,|V_m| in x-order (0 when absorbed)
  int clique_size = 0;          // |V0|
  CompletePartiteShape shape;
};
RealisationLayout realisation_layout(int n, const PartiteVector& x);

// S_d^I(x): sum over distinct indices outside I of Π x_{i_j}^{d_j}.
Rational elementary_symmetric(const PartiteVector& x, const SymmetricIndex& idx);

// JSON {"x0":"p/q","parts":["p/q",...]}.
std::string partite_vector_to_json(const PartiteVector& x);
PartiteVector partite_vector_from_json(const std::string& text);

}  // namespace symstab
