#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "symstab/graph.hpp"
#include "symstab/objective.hpp"
#include "symstab/partite_vector.hpp"
#include "symstab/rational.hpp"

namespace symstab {

inline constexpr double kEnumerationLimit = 1e7;

// Labeled pattern of k sampled positions: positions p<q are adjacent iff their
// labels differ or both are 0 (clique). Bit j(j-1)/2+i encodes pair i<j.
std::uint32_t pattern_code(const std::vector<int>& labels);

// Σ over labelings of positions fixed.size()..k-1 by supp*(x) of the product of
// their weights, grouped by the pattern code of the full labeling (fixed ++ free).
std::unordered_map<std::uint32_t, Rational> pattern_weights(const PartiteVector& x, int k,
                                                           const std::vector<int>& fixed = {});

// λ(x) by direct enumeration of supp*(x)^k.
Rational lambda_of_vector(const ObjectiveSpec& spec, const PartiteVector& x);

// Closed-form p(K_a, x) (with the factor C(ℓ−t, s) for singleton parts absorbed
// by the clique mass).
Rational density_formula(const Partition& a, const PartiteVector& x);

// λ(x) via the complete partite expansion of the spec.
Rational lambda_closed_form(const ObjectiveSpec& spec, const PartiteVector& x);

// Floating evaluation on a homogeneous point (x0, parts); parts need not be sorted.
double lambda_double(const ObjectiveSpec& spec, double x0, const std::vector<double>& parts);
// Value and gradient with respect to (x0, x1, ..., xm).
double lambda_gradient(const ObjectiveSpec& spec, double x0, const std::vector<double>& parts,
                       std::vector<double>& gradient);

// P(K_a, G) for the complete partite G with the given shape.
Integer count_partite(const Partition& a, const CompletePartiteShape& shape);

}  // namespace symstab
