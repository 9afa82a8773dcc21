#pragma once

#include <vector>

#include "evokit/algebra.hpp"
#include "evokit/permgroup.hpp"

namespace evokit {

// Weighted basis automorphism phi(b_i) = lambda_i * b_{sigma(i)} with all
// weights nonzero.  phi is an algebra automorphism iff
//
//   lambda_j * mu_ij = lambda_i^2 * mu_{sigma(i) sigma(j)}   for all i, j.
//
// Composition applies the right factor first, matching Perm composition.
struct WeightedAutomorphism {
  Perm sigma;
  std::vector<Scalar> lambda;

  bool operator==(const WeightedAutomorphism& rhs) const {
    return sigma == rhs.sigma && lambda == rhs.lambda;
  }
  bool operator<(const WeightedAutomorphism& rhs) const {
    if (sigma != rhs.sigma) return sigma < rhs.sigma;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      int c = lambda[i].cmp(rhs.lambda[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

WeightedAutomorphism compose(const WeightedAutomorphism& a,
                             const WeightedAutomorphism& b);
WeightedAutomorphism inverse(const WeightedAutomorphism& a);

// Full compatibility check of the defining condition above.
bool check_automorphism(const EvolutionAlgebra& x, const Perm& sigma,
                        const std::vector<Scalar>& lambda);

// Closed form when every diagonal entry is nonzero: the (i,i) condition
// pins lambda_i = mu_ii / mu_{sigma(i) sigma(i)}.  The result is not
// validated against the remaining conditions.
std::vector<Scalar> lambda_from_diagonal(const EvolutionAlgebra& x,
                                         const Perm& sigma);

// Closed form for lambda_i from three off-diagonal conditions through
// auxiliary indices j, k (all pairwise distinct):
//
//   B = (mu_ik / mu_{s(i)s(k)}) * (mu_{s(j)s(k)} / mu_jk) * (mu_ji / mu_{s(j)s(i)})
//
// Denominator entries must be nonzero.  Not validated by itself.
Scalar lambda_B(const EvolutionAlgebra& x, const Perm& sigma, int i, int j,
                int k);

// All weight vectors lambda making (sigma, lambda) an automorphism of x.
// Returns the empty set when sigma does not respect the zero pattern.
// Expects x idempotent; results are sorted canonically.
std::vector<std::vector<Scalar>> solve_lambda(const EvolutionAlgebra& x,
                                              const Perm& sigma);

// The general propagation engine behind solve_lambda, without the
// closed-form shortcuts.  Exposed so the two routes can be compared.
std::vector<std::vector<Scalar>> solve_lambda_by_propagation(
    const EvolutionAlgebra& x, const Perm& sigma);

struct AutOptions {
  // 0 means: take EVOKIT_THREADS from the environment, default 1.
  int threads = 0;
  int max_dim = 16;
};

struct AutomorphismGroup {
  std::vector<WeightedAutomorphism> elements;  // all of Aut(x), sorted
  std::vector<WeightedAutomorphism> kernel;    // elements with sigma = id
  PermGroup image;                             // permutation parts
  bool faithful = false;                       // kernel trivial
  bool full = false;                           // image is all of S_n
};

// Exhaustive automorphism search: backtracking over sigma in lexicographic
// order, pruned by row signatures and pairwise zero-pattern compatibility,
// with solve_lambda at the leaves.  Requires x idempotent.
AutomorphismGroup automorphism_group(const EvolutionAlgebra& x,
                                     const AutOptions& options = {});

// Weight vectors of the automorphisms fixing every basis line.
std::vector<WeightedAutomorphism> kernel_elements(const EvolutionAlgebra& x);

struct RhoResult {
  PermGroup image;
  bool faithful = false;
};

// Permutation representation sigma of Aut(x) on the natural basis.
RhoResult rho(const EvolutionAlgebra& x, const AutOptions& options = {});

// Restricted representation: normalize the basis vectors that are
// idempotent up to scale, recompute the automorphism group, and restrict
// the permutation parts to those first m indices.
PermGroup rho_tilde(const EvolutionAlgebra& x, const AutOptions& options = {});

}  // namespace evokit
