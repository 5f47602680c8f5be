#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symstab/objective.hpp"
#include "symstab/partite_vector.hpp"
#include "symstab/perturbation.hpp"
#include "symstab/polynomial.hpp"
#include "symstab/rational.hpp"

namespace symstab {

struct FlipEntry {
  int i1 = 0, i2 = 0;
  Rational value;  // ∇••_{i1 i2} λ(x)
};

struct Str1Result {
  std::vector<FlipEntry> flips;
  Rational minimum;
};

// ∇•• over all ordered pairs of supp*(x) (i1 = i2 included).
Str1Result check_str1(const ObjectiveSpec& spec, const PartiteVector& x);

// w_i for i in supp*(x), in extended_support order.
std::vector<Rational> compute_w(const PartiteVector& x, const AttachmentPattern& p);

struct PatternMargin {
  unsigned long mask = 0;  // bit i-1 ↔ b(i)
  UPoly gradient;          // ∇•_{b,α} λ(x) as a polynomial in α
  Rational w_min;          // min_i w_i
  bool constrained = true; // false when the right-hand side vanishes identically
  bool infeasible = false; // ∇• < 0 where the right-hand side vanishes: no c ≥ 0 works
  Rational c;              // largest certified c for this pattern
  bool exact = false;      // c is the exact supremum rather than a certified lower bound
};

struct Str2Result {
  std::vector<PatternMargin> patterns;
  std::optional<Rational> c;  // min over constrained patterns (absent if none constrain c)
  bool infeasible = false;
};

// Largest c (certified) with ∇•_{b,α} ≥ c((1−α)x0 + min w_i) for all b over
// supp(x) and α ∈ [0,1] (α = 1 only when x0 = 0).
Str2Result check_str2(const ObjectiveSpec& spec, const PartiteVector& x);

// φ_c(α) = g(α) − c((1−α)x0 + w_min) ≥ 0 on the α-range, decided exactly.
bool str2_margin_holds(const UPoly& g, const Rational& x0, const Rational& w_min, const Rational& c);

struct CandidateStrictness {
  PartiteVector x;
  Str1Result str1;
  Str2Result str2;
  Rational c;  // min(c1, c2) for this candidate
};

struct StrictnessReport {
  std::vector<CandidateStrictness> candidates;
  Rational c1, c2, c;
  bool pass = false;
};

StrictnessReport strictness_certificate(const ObjectiveSpec& spec, const std::vector<PartiteVector>& candidates);

struct FiniteStrictness {
  int n = 0;
  Rational c1;            // min over pair types of n²(λ(G) − λ(G⊕xy))
  Rational c2;            // min over attachments with W > 0 of n(λ(G) − λ(G_v, v))/W
  bool clone_edits_zero = true;  // every clone attachment needs W = 0 edits
  bool pass = false;      // c1 > 0 and c2 > 0
};

FiniteStrictness finite_strictness_check(const ObjectiveSpec& spec, const PartiteVector& x, int n);

std::string strictness_to_json(const StrictnessReport& report);

}  // namespace symstab
