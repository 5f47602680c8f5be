#pragma once

#include <cstddef>
#include <vector>

#include "symstab/interval.hpp"
#include "symstab/multivariate.hpp"
#include "symstab/rational.hpp"

namespace symstab {

using Box = std::vector<Interval>;  // one interval per polynomial variable

struct BBOptions {
  Rational tol = Rational(1, 1000000);
  std::size_t max_boxes = 400000;
  // Region constraints g(v) ≤ 0, over the same variables as the objective.
  std::vector<MPoly> constraints;
};

struct BBResult {
  Rational upper;                 // certified: max over box ∩ region ≤ upper
  Rational lower;                 // best feasible sample value (−∞ encoded by has_lower = false)
  bool has_lower = false;
  std::vector<Rational> argmax;   // point attaining `lower`
  bool converged = false;         // upper − lower ≤ tol
  bool empty_region = false;      // no feasible point survives pruning
  std::size_t boxes = 0;
};

// Rigorous upper bound on max p over `box` ∩ {constraints ≤ 0} by best-first
// subdivision with natural and mean-value interval extensions.
BBResult bb_max_bound(const MPoly& p, const Box& box, const BBOptions& options = {});

// Same for a univariate polynomial on [lo, hi].
BBResult bb_max_bound(const UPoly& p, const Rational& lo, const Rational& hi, const BBOptions& options = {});

}  // namespace symstab
