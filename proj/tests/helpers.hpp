#pragma once

#include <evokit/algebra.hpp>
#include <evokit/field.hpp>
#include <evokit/perm.hpp>

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace evotest {

using namespace evokit;

inline FieldSpec Q() { return FieldSpec::rationals(); }
inline FieldSpec GF(uint64_t p) { return FieldSpec::prime_field(p); }

inline Scalar qs(const std::string& text) { return Scalar::parse(text, Q()); }

// Builds an algebra from a row-major matrix of scalar literals.
inline EvolutionAlgebra alg(const FieldSpec& field,
                            const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Scalar>> m;
  for (const auto& row : rows) {
    std::vector<Scalar> out;
    for (const auto& cell : row) out.push_back(Scalar::parse(cell, field));
    m.push_back(std::move(out));
  }
  return EvolutionAlgebra::create(field, std::move(m));
}

inline EvolutionAlgebra alg_gf(uint64_t p, const std::vector<std::vector<long>>& rows) {
  FieldSpec f = GF(p);
  std::vector<std::vector<Scalar>> m;
  for (const auto& row : rows) {
    std::vector<Scalar> out;
    for (long cell : row) out.push_back(Scalar::from_int(cell, f));
    m.push_back(std::move(out));
  }
  return EvolutionAlgebra::create(f, std::move(m));
}

inline std::string fixtures_dir() { return EVOKIT_FIXTURES_DIR; }

inline std::vector<std::string> fixture_files(const std::string& subdir) {
  std::vector<std::string> paths;
  for (const auto& entry :
       std::filesystem::directory_iterator(fixtures_dir() + "/" + subdir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      paths.push_back(entry.path().string());
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

// Rejection-samples a structure matrix over GF(p) until it is invertible.
// Roughly 40% of entries are zero so sparse zero patterns get exercised.
inline EvolutionAlgebra random_regular_algebra(std::mt19937_64& rng, int dim,
                                               uint64_t p) {
  FieldSpec f = GF(p);
  for (;;) {
    std::vector<std::vector<Scalar>> m(dim, std::vector<Scalar>());
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        uint64_t r = rng() % 5 < 2 ? 0 : 1 + rng() % (p - 1);
        m[i].push_back(Scalar::residue(r, f));
      }
    EvolutionAlgebra x = EvolutionAlgebra::create(f, std::move(m));
    if (x.idempotent) return x;
  }
}

// Independent closure oracle: multiplies generators to a fixed point without
// touching the stabilizer-chain code under test.
inline std::set<Perm> closure(int degree, const std::vector<Perm>& gens) {
  std::set<Perm> seen{Perm::identity(degree)};
  std::vector<Perm> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Perm y = g * x;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace evotest
