#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "evokit/algebra.hpp"
#include "evokit/autgroup.hpp"
#include "evokit/permgroup.hpp"

namespace evokit {

// Finite simple undirected graph with a distinguished nonempty vertex
// subset ("tagged", the V of graph files).  Vertices are 0-based
// internally; files use 1-based ids.
struct LabeledGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized a < b, sorted
  std::vector<int> tagged;                 // ascending, nonempty

  static LabeledGraph create(int n, std::vector<std::pair<int, int>> edges,
                             std::vector<int> tagged);

  int degree(int v) const;
  bool adjacent(int a, int b) const;
};

// Compiles the graph into an evolution algebra on basis
// (vertices..., edges...) whose squares are
//
//   b_v^2 = b_v                                  v tagged,
//   b_u^2 = b_u + sum of b_w over tagged w       u untagged,
//   b_e^2 = b_e + b_a + b_b                      e = {a, b}.
//
// Requires minimum degree 2.  The structure matrix has unit diagonal and
// determinant 1, so the algebra is always idempotent.
EvolutionAlgebra build_algebra_from_graph(const LabeledGraph& g,
                                          const FieldSpec& field);

// Vertex bijections preserving adjacency; with honor_tags they must also
// map the tagged set onto itself.
PermGroup graph_automorphisms(const LabeledGraph& g, bool honor_tags = true);

struct RealizationReport {
  std::uint64_t graph_aut_order = 0;    // tag-preserving graph automorphisms
  std::uint64_t algebra_aut_order = 0;  // weighted automorphisms of the algebra
  bool isomorphic = false;              // abstract group isomorphism
  bool representations_equivalent = false;  // restricted action vs tagged action
  bool tagged_invariant = false;  // tagged set preserved by all graph autos
  int idempotent_count = 0;       // m of the compiled algebra
  bool success = false;
};

// Builds the algebra, compares its automorphism group with the graph's,
// and checks that the restricted representation matches the graph action
// on the tagged vertices.  When the tagged set is not invariant under the
// full (untagged) automorphism group the representation comparison is
// skipped and the report cannot succeed.
RealizationReport verify_realization(const LabeledGraph& g,
                                     const FieldSpec& field,
                                     const AutOptions& options = {});

// Families: "cycle" (n >= 3, all tagged), "complete" (n >= 3, all
// tagged), "cycle_with_tags" (n >= 3, given 0-based tagged subset).
LabeledGraph builtin_graph(const std::string& family, int n,
                           std::vector<int> tagged = {});

}  // namespace evokit
