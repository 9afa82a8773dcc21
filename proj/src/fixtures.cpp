#include "evokit/fixtures.hpp"

#include "evokit/errors.hpp"

namespace evokit {

EvolutionAlgebra identity_algebra(int n, const FieldSpec& field) {
  if (n < 1) throw DomainError("identity algebra needs n >= 1");
  std::vector<std::vector<Scalar>> m(
      n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (int i = 0; i < n; ++i) m[i][i] = Scalar::one(field);
  return EvolutionAlgebra::create(field, std::move(m));
}

EvolutionAlgebra constant_algebra(int n, long diag, long off,
                                  const FieldSpec& field) {
  if (n < 1) throw DomainError("constant algebra needs n >= 1");
  Scalar d = Scalar::from_int(diag, field);
  Scalar o = Scalar::from_int(off, field);
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, o));
  for (int i = 0; i < n; ++i) m[i][i] = d;
  return EvolutionAlgebra::create(field, std::move(m));
}

EvolutionAlgebra swap_algebra(const FieldSpec& field) {
  Scalar zero = Scalar::zero(field);
  Scalar one = Scalar::one(field);
  return EvolutionAlgebra::create(field, {{zero, one}, {one, zero}});
}

EvolutionAlgebra cycle_graph_algebra(int n, const FieldSpec& field) {
  return build_algebra_from_graph(builtin_graph("cycle", n), field);
}

}  // namespace evokit
