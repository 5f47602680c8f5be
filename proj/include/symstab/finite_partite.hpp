#pragma once

#include <vector>

#include "symstab/objective.hpp"
#include "symstab/partite_vector.hpp"
#include "symstab/rational.hpp"

namespace symstab {

// A graph described at class level: vertices in one class are twins (pairwise
// all adjacent or all non-adjacent, identical outside), plus a few special
// vertices with arbitrary adjacency. Lets λ be evaluated exactly on blow-ups far
// beyond the 64-vertex Graph limit.
struct Blowup {
  struct Class {
    long size = 0;
    bool internal_edges = false;
  };
  std::vector<Class> classes;
  std::vector<std::vector<bool>> class_adjacent;    // [c][d], c != d
  std::vector<std::vector<bool>> special_to_class;  // [s][c]
  std::vector<std::vector<bool>> special_adjacent;  // [s][t]

  long order() const;
  int special_count() const { return static_cast<int>(special_to_class.size()); }
  int add_class(long size, bool internal_edges, bool adjacent_to_others);
  int add_special(const std::vector<bool>& to_class);
  void set_special_edge(int s, int t, bool present);
};

// Σ γ(G[X]) over k-sets X containing every special vertex.
Rational blowup_sum(const ObjectiveSpec& spec, const Blowup& g);

// Realisation G_{n,x} as a blow-up: one class per realised part (in x-order,
// absorbed parts omitted) followed by the clique class V0 (possibly empty).
struct RealisedBlowup {
  Blowup graph;
  std::vector<int> part_class;  // x-index i ≥ 1 → class index, or -1 if absorbed
  int clique_class = -1;
};
RealisedBlowup realisation_blowup(int n, const PartiteVector& x);

// λ(G_{n,x}) exactly.
Rational finite_lambda(const ObjectiveSpec& spec, const PartiteVector& x, int n);

// (Λ(G) − Λ(G⊕v1v2)) / C(n−2,k−2) on G = G_{n,x} with v1 ∈ V_{i1}, v2 ∈ V_{i2}
// (index 0 = clique); i1 = i2 picks two distinct vertices of that part.
Rational finite_flip_gradient(const ObjectiveSpec& spec, const PartiteVector& x, int n, int i1, int i2);

// λ(G_{n,x} +_{b,α} u, u); b indexed by part 1..m (b[0] unused).
Rational finite_attach_value(const ObjectiveSpec& spec, const PartiteVector& x, int n, const std::vector<bool>& b,
                             const Rational& alpha);

}  // namespace symstab
