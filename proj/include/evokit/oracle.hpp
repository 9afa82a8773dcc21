#pragma once

#include <cstdint>
#include <vector>

#include "evokit/autgroup.hpp"

namespace evokit {

struct OracleCaps {
  int max_dim = 5;
  std::uint64_t max_modulus = 11;
};

// Reference enumeration over GF(p): every permutation is paired with every
// unit weight vector and the defining condition is checked directly with
// modular arithmetic, independent of the search in automorphism_group.
// Requires an idempotent algebra over a prime field within the caps.
// Results are sorted the same way automorphism_group sorts.
std::vector<WeightedAutomorphism> brute_force_automorphisms(
    const EvolutionAlgebra& x, const OracleCaps& caps = {});

// True iff the search and the enumeration return identical element lists.
bool cross_check(const EvolutionAlgebra& x, const OracleCaps& caps = {},
                 const AutOptions& options = {});

}  // namespace evokit
