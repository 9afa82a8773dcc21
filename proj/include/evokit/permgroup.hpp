#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "evokit/perm.hpp"

namespace evokit {

struct TransitivityCaps {
  int max_degree = 16;
  int max_k = 6;
};

inline constexpr std::uint64_t kDefaultMaxEnumeration = 40320;
inline constexpr std::uint64_t kDefaultMaxIsoOrder = 5040;

// Permutation group on {0, ..., degree-1} given by generators.  Order and
// membership come from a stabilizer chain built at construction time, so
// instances are immutable and safe to share across threads.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  std::uint64_t order() const;
  bool contains(const Perm& p) const;

  // Subset of the given generators obtained by dropping each one that is
  // already generated by its predecessors.
  std::vector<Perm> reduced_generators() const;

  // All elements, sorted by image array.  Guarded by max_count.
  std::vector<Perm> elements(std::uint64_t max_count = kDefaultMaxEnumeration) const;

  // Orbit of the tuple (0, ..., k-1) under the coordinatewise action has
  // size n(n-1)...(n-k+1) iff the group is k-transitive.
  bool is_k_transitive(int k, const TransitivityCaps& caps = {}) const;

  // Largest k for which the group is k-transitive (0 if intransitive).
  int transitivity_degree(const TransitivityCaps& caps = {}) const;

 private:
  struct Level {
    int base = 0;
    std::vector<Perm> gens;
    std::map<int, Perm> transversal;  // point -> u with u(base) = point
  };

  void insert(Perm g, std::size_t from_level);
  std::pair<Perm, std::size_t> sift_from(Perm g, std::size_t from) const;
  void assign(Perm g, std::size_t level);
  void close_chain(std::size_t top);

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

// Conjugating permutation tau with tau^{-1} * G1 * tau = G2, if the two
// groups are equal up to relabeling of the points.  Groups of different
// degree are never equivalent.
std::optional<Perm> equivalence_of_representations(
    const PermGroup& g1, const PermGroup& g2,
    std::uint64_t max_enumeration = kDefaultMaxEnumeration);

// Abstract isomorphism test by generator-image search, practical for
// small orders only.
bool are_isomorphic_small(const PermGroup& g1, const PermGroup& g2,
                          std::uint64_t max_order = kDefaultMaxIsoOrder);

}  // namespace evokit
