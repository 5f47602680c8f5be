#pragma once

#include <string>
#include <vector>

#include "symstab/graph.hpp"
#include "symstab/objective.hpp"
#include "symstab/partite_vector.hpp"
#include "symstab/polynomial.hpp"
#include "symstab/rational.hpp"

namespace symstab {

// (b, α): b[i] = 1 joins the new vertex to all of part i (i ≥ 1; b[0] unused),
// α is the joined fraction of the clique V0.
struct AttachmentPattern {
  std::vector<bool> b;
  Rational alpha = 1;

  bool joined(int i) const { return i >= 1 && i < static_cast<int>(b.size()) && b[static_cast<std::size_t>(i)]; }
  std::string to_string() const;
};

// The clone of part i (i = 0: a clique vertex): adjacent to everything except
// part i, α = 1. This is the pattern written (e_i, 1).
AttachmentPattern clone_pattern(const PartiteVector& x, int i);
// Pattern from a bitmask over parts 1..m (bit i-1 ↔ part i).
AttachmentPattern pattern_from_mask(const PartiteVector& x, unsigned long mask, const Rational& alpha);
// Enforces α = 1 when x0 = 0 and checks b covers supp(x).
AttachmentPattern normalise_pattern(const PartiteVector& x, AttachmentPattern p);

// ∇••_{i1 i2} λ(x).
Rational flip_gradient(const ObjectiveSpec& spec, const PartiteVector& x, int i1, int i2);

// λ(x, (b, α)) as a polynomial in α.
UPoly attach_polynomial(const ObjectiveSpec& spec, const PartiteVector& x, const std::vector<bool>& b);
Rational attach_value(const ObjectiveSpec& spec, const PartiteVector& x, const AttachmentPattern& p);

// ∇•_{b,α} λ(x) = λ(x, reference clone) − λ(x, (b, α)); the reference is the
// clone of part 1 (of the clique if x has no parts).
UPoly vertex_gradient_polynomial(const ObjectiveSpec& spec, const PartiteVector& x, const std::vector<bool>& b);
Rational vertex_gradient(const ObjectiveSpec& spec, const PartiteVector& x, const AttachmentPattern& p);

// ∂λ/∂x_i = k·λ(x, clone_i), x0 an independent coordinate.
Rational partial_derivative(const ObjectiveSpec& spec, const PartiteVector& x, int i);

// max over supp*(x) of |(1/k)∂λ/∂x_i − λ(x)|.
Rational lagrange_residual(const ObjectiveSpec& spec, const PartiteVector& x);

// Comparison of a complete partite H' with a perturbation H.
struct DiagnosticBounds {
  Rational xi0, xi1, xi2;
  long wrong_pairs = 0;   // |T|
  int max_degree = 0;     // Δ(T)
  bool star = false;      // T is a star (or empty)
  Rational difference;    // λ(H') − λ(H)
  Rational min_flip, max_flip;  // extremes of ∇•• over pair types in T (limit vector of H')
  bool hypothesis_lower = false;  // every ∇•• ≥ c
  bool hypothesis_upper = false;  // every ∇•• ≤ c
  bool conclusion_i = false, conclusion_ii = false, conclusion_iii = false;
};
DiagnosticBounds compare_bounds(const ObjectiveSpec& spec, const Graph& h, const Graph& h_prime, const Rational& c);

}  // namespace symstab
