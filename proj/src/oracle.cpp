#include "evokit/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "evokit/errors.hpp"

namespace evokit {

std::vector<WeightedAutomorphism> brute_force_automorphisms(
    const EvolutionAlgebra& x, const OracleCaps& caps) {
  if (x.field.kind != FieldKind::PrimeField) {
    throw DomainError("the oracle enumerates over prime fields only");
  }
  if (!x.idempotent) {
    throw DomainError("the oracle requires an idempotent algebra");
  }
  if (x.dim > caps.max_dim) {
    throw CapExceeded("dimension " + std::to_string(x.dim) +
                      " exceeds oracle cap " + std::to_string(caps.max_dim));
  }
  if (x.field.modulus > caps.max_modulus) {
    throw CapExceeded("modulus " + std::to_string(x.field.modulus) +
                      " exceeds oracle cap " +
                      std::to_string(caps.max_modulus));
  }

  const int n = x.dim;
  const std::uint64_t p = x.field.modulus;
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = x.mu(i, j).residue_value();
  }

  std::vector<WeightedAutomorphism> out;
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<std::vector<std::uint64_t>> ms(n, std::vector<std::uint64_t>(n));
  do {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) ms[i][j] = m[img[i]][img[j]];
    }
    std::vector<std::uint64_t> lam(n, 1);
    while (true) {
      bool good = true;
      for (int i = 0; good && i < n; ++i) {
        std::uint64_t li2 =
            static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(lam[i]) * lam[i] % p);
        for (int j = 0; j < n; ++j) {
          std::uint64_t lhs = static_cast<std::uint64_t>(
              static_cast<unsigned __int128>(lam[j]) * m[i][j] % p);
          std::uint64_t rhs = static_cast<std::uint64_t>(
              static_cast<unsigned __int128>(li2) * ms[i][j] % p);
          if (lhs != rhs) {
            good = false;
            break;
          }
        }
      }
      if (good) {
        WeightedAutomorphism a;
        a.sigma = Perm(img);
        a.lambda.reserve(n);
        for (std::uint64_t l : lam) {
          a.lambda.push_back(Scalar::residue(l, x.field));
        }
        out.push_back(std::move(a));
      }
      // Advance the weight odometer in lexicographic order.
      int pos = n - 1;
      while (pos >= 0 && lam[pos] == p - 1) {
        lam[pos] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++lam[pos];
    }
  } while (std::next_permutation(img.begin(), img.end()));

  std::sort(out.begin(), out.end());
  return out;
}

bool cross_check(const EvolutionAlgebra& x, const OracleCaps& caps,
                 const AutOptions& options) {
  std::vector<WeightedAutomorphism> reference =
      brute_force_automorphisms(x, caps);
  AutomorphismGroup searched = automorphism_group(x, options);
  return reference == searched.elements;
}

}  // namespace evokit
