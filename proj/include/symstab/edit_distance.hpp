#pragma once

#include "symstab/graph.hpp"
#include "symstab/partite_vector.hpp"
#include "symstab/rational.hpp"

namespace symstab {

// δ̂₁(G,H) = (2/n²)·min over bijections σ of |E(H) △ E(σ(G))|, n ≤ 9.
Rational edit_distance_exact(const Graph& g, const Graph& h);

// δedit(x,y): Σx_i² + Σy_j² − 2·max Σ_{i,j≥1} X_ij² over transportation plans X
// between (x0, x1, ...) and (y0, y1, ...). Supports up to 8 entries each.
Rational edit_distance_vectors(const PartiteVector& x, const PartiteVector& y);

}  // namespace symstab
