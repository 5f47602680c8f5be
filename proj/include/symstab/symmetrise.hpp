#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "symstab/graph.hpp"
#include "symstab/objective.hpp"
#include "symstab/rational.hpp"

namespace symstab {

struct SymmetrisationStep {
  int from = 0;  // vertex whose neighbourhood is copied
  int to = 0;    // vertex that becomes its clone
  Rational lambda_before, lambda_after;
  int pairs_edited = 0;
};

struct SymmetrisationTrace {
  std::vector<SymmetrisationStep> steps;
  Graph initial_graph;
  Graph final_graph;
  CompletePartiteShape final_shape;
};

// Raised for non-eligible specs when both candidate clones lower λ.
struct SymmetrisationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxSymmetriseOrder = 24;

// (Sym1): repeatedly clone across a non-adjacent pair of twin classes,
// keeping the λ-larger option, until the graph is complete partite.
SymmetrisationTrace symmetrise_full(const ObjectiveSpec& spec, const Graph& g);

// (Sym2): with g − z complete partite, make z complete or empty to every part,
// one pair per step.
SymmetrisationTrace symmetrise_vertex(const ObjectiveSpec& spec, const Graph& g, int z);

std::string trace_to_json(const SymmetrisationTrace& trace);

}  // namespace symstab
