#pragma once

#include <string>
#include <vector>

#include "evokit/field.hpp"
#include "evokit/perm.hpp"

namespace evokit {

// Finite-dimensional evolution algebra presented by its structure matrix
// in a fixed natural basis b_1, ..., b_n:
//
//   b_i * b_i = sum_j matrix[i][j] * b_j,      b_i * b_j = 0 for i != j.
//
// Row i holds the coefficients of b_i^2 (some texts use the transpose).
// The algebra is idempotent-rich ("perfect") exactly when det != 0; the
// determinant and that flag are computed once at construction.
struct EvolutionAlgebra {
  FieldSpec field;
  int dim = 0;
  std::vector<std::vector<Scalar>> matrix;
  std::vector<std::string> labels;
  Scalar det;
  bool idempotent = false;

  static EvolutionAlgebra create(const FieldSpec& field,
                                 std::vector<std::vector<Scalar>> matrix,
                                 std::vector<std::string> labels = {});

  const Scalar& mu(int i, int j) const { return matrix[i][j]; }
};

// Exact determinant: fraction-free Bareiss elimination over Q, ordinary
// Gaussian elimination over GF(p).
Scalar matrix_determinant(const std::vector<std::vector<Scalar>>& m,
                          const FieldSpec& field);

bool is_idempotent(const EvolutionAlgebra& x);

// Basis change b_i -> lambda_i * b_i with all lambda_i nonzero:
// mu'_ij = lambda_i^2 * lambda_j^{-1} * mu_ij.
EvolutionAlgebra rescale_basis(const EvolutionAlgebra& x,
                               const std::vector<Scalar>& lambda);

// Basis reindexing b_i -> b_{tau(i)}: mu'_{tau(i) tau(j)} = mu_ij.
// Labels follow their basis vectors.
EvolutionAlgebra permute_basis(const EvolutionAlgebra& x, const Perm& tau);

// Result of normalizing the natural basis vectors that are themselves
// idempotent up to scale.  Basis vector b_i satisfies b_i^2 = mu_ii * b_i
// with mu_ii != 0 iff row i has its only nonzero entry on the diagonal;
// those vectors are rescaled to genuine idempotents (b_i^2 = b_i) and
// moved to the front, preserving relative order on both blocks.
struct NaturalIdempotents {
  EvolutionAlgebra normalized;
  int count = 0;                  // how many basis vectors were idempotent
  std::vector<Scalar> rescale;    // factors applied, 1 on the rest
  Perm reorder;                   // basis permutation applied after rescale
};

NaturalIdempotents idempotent_natural_elements(const EvolutionAlgebra& x);

// Directed graph on the basis indices with an arc i -> j iff mu_ij != 0.
struct ZeroPatternDigraph {
  int n = 0;
  std::vector<std::vector<bool>> arc;
  std::vector<std::vector<int>> out;
};

ZeroPatternDigraph zero_pattern_digraph(const EvolutionAlgebra& x);

}  // namespace evokit
