#pragma once

#include "evokit/algebra.hpp"
#include "evokit/realize.hpp"

namespace evokit {

// Identity structure matrix: n pairwise orthogonal idempotents.
EvolutionAlgebra identity_algebra(int n, const FieldSpec& field);

// Constant pattern: diag on the diagonal, off everywhere else.
EvolutionAlgebra constant_algebra(int n, long diag, long off,
                                  const FieldSpec& field);

// The 2-dimensional swap: b_1^2 = b_2, b_2^2 = b_1.
EvolutionAlgebra swap_algebra(const FieldSpec& field);

// Algebra compiled from the cycle graph on n vertices, all tagged.
EvolutionAlgebra cycle_graph_algebra(int n, const FieldSpec& field);

}  // namespace evokit
