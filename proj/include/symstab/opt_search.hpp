#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symstab/algebraic.hpp"
#include "symstab/graph.hpp"
#include "symstab/interval.hpp"
#include "symstab/objective.hpp"
#include "symstab/partite_vector.hpp"
#include "symstab/polynomial.hpp"
#include "symstab/rational.hpp"

namespace symstab {

struct FiniteOptResult {
  int n = 0;
  Rational value;                             // max λ over complete partite graphs on n vertices
  std::vector<CompletePartiteShape> shapes;   // all maximisers
  std::size_t evaluated = 0;                  // partitions scanned
};

// λ of the complete partite graph with this shape, exactly.
Rational lambda_of_shape(const ObjectiveSpec& spec, const CompletePartiteShape& shape);

FiniteOptResult finite_opt(const ObjectiveSpec& spec, int n);

struct OptOptions {
  int max_support = 6;
  int starts = 200;
  std::uint64_t seed = 1;
  int max_iterations = 4000;
  std::vector<PartiteVector> seeds;  // extra user-supplied starts
};

struct Candidate {
  std::vector<double> point;       // (x0, x1 ≥ x2 ≥ ...) floating
  double value = 0;                // λ at the floating point
  double residual = 0;             // floating Lagrange residual
  std::optional<PartiteVector> snapped;
  Rational exact_value;            // λ(snapped) when snapped
  Rational exact_residual;         // lagrange residual at the snap
  int hits = 0;                    // starts converging to this cluster
};

struct CandidateSet {
  std::vector<Candidate> candidates;  // distinct local maxima, by decreasing λ
  std::vector<std::size_t> maximisers;  // indices within 1e-9 of the best value
  int starts = 0;
  int converged = 0;
  std::uint64_t seed = 0;
};

CandidateSet continuous_opt(const ObjectiveSpec& spec, const OptOptions& options);

struct KstResult {
  int s = 0, t = 0;
  UPoly h;                         // s x^{t−s+1} − t x^{t−s} + t x − s
  bool half = false;               // s ≥ C(t−s, 2): α = 1/2
  std::optional<AlgebraicNumber> x_root;  // root of h in (0,1) otherwise
  AlgebraicNumber alpha{Rational(1, 2)};  // maximiser of f_{s,t} on [1/2, 1]
  Interval max_f;                  // enclosure of M = f_{s,t}(α) (before halving)
  Interval inducibility;           // C(s+t, s)·M, halved when s = t
};

// f_{s,t}(α) = α^s(1−α)^t + α^t(1−α)^s.
UPoly kst_f(int s, int t);
UPoly kst_h(int s, int t);
KstResult kst_maximiser(int s, int t);

std::string candidate_set_to_json(const CandidateSet& set);

}  // namespace symstab
