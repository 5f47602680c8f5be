#pragma once

#include <optional>
#include <vector>

#include "symstab/polynomial.hpp"

namespace symstab {

// Dense LP  max cᵀx  s.t.  A x ≤ b,  x ≥ 0,  with b ≥ 0 (origin feasible).
struct LpResult {
  bool optimal = false;
  bool unbounded = false;
  std::vector<double> x;
  double value = 0;
};
LpResult simplex_max(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                     const std::vector<double>& c, int max_pivots = 20000);

// Acceptance rule for "p·r1 certifies p > 0 on (0,∞)": r1 ≠ 0 with non-negative
// coefficients; p·r1 with non-negative coefficients whose constant and leading
// coefficients are positive.
bool positive_multiplier_verifies(const UPoly& p, const UPoly& r1);

struct MultiplierResult {
  std::optional<UPoly> r1;   // integer coefficients when found
  int degree = -1;           // degree at which the search succeeded
  int scale_digits = 0;      // power of ten used before rounding
};

// Searches degrees 0..max_degree for r1 with positive coefficients such that
// p·r1 passes positive_multiplier_verifies. Requires p(0) > 0.
MultiplierResult positive_multiplier_lp(const UPoly& p, int max_degree);

}  // namespace symstab
