#include "evokit/algebra.hpp"

#include <utility>

#include "evokit/errors.hpp"

namespace evokit {

namespace {

Scalar determinant_rational(std::vector<std::vector<Scalar>> m, int n) {
  // Scale each row to integers, run fraction-free Bareiss elimination,
  // then divide the scaling back out.
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (int i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < n; ++j) {
      l = lcm(l, m[i][j].rational_value().get_den());
    }
    scale *= l;
    for (int j = 0; j < n; ++j) {
      const mpq_class& q = m[i][j].rational_value();
      a[i][j] = q.get_num() * (l / q.get_den());
    }
  }

  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return Scalar::zero(FieldSpec::rationals());
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }

  mpq_class det(sign * a[n - 1][n - 1], scale);
  det.canonicalize();
  return Scalar::rational(det);
}

Scalar determinant_prime_field(std::vector<std::vector<Scalar>> m, int n,
                               const FieldSpec& f) {
  std::uint64_t p = f.modulus;
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j].residue_value();
  }

  std::uint64_t det = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i) {
      if (a[i][k] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return Scalar::zero(f);
    if (pivot != k) {
      std::swap(a[k], a[pivot]);
      det = (p - det) % p;
    }
    det = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(det) * a[k][k]) % p);
    std::uint64_t inv = mod_inverse(a[k][k], p);
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      std::uint64_t factor = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(a[i][k]) * inv) % p);
      for (int j = k; j < n; ++j) {
        std::uint64_t sub = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(factor) * a[k][j]) % p);
        a[i][j] = (a[i][j] + p - sub) % p;
      }
    }
  }
  return Scalar::residue(det, f);
}

}  // namespace

Scalar matrix_determinant(const std::vector<std::vector<Scalar>>& m,
                          const FieldSpec& field) {
  int n = static_cast<int>(m.size());
  if (n == 0) throw DomainError("determinant of an empty matrix");
  if (field.kind == FieldKind::Rationals) {
    return determinant_rational(m, n);
  }
  return determinant_prime_field(m, n, field);
}

EvolutionAlgebra EvolutionAlgebra::create(
    const FieldSpec& field, std::vector<std::vector<Scalar>> matrix,
    std::vector<std::string> labels) {
  int n = static_cast<int>(matrix.size());
  if (n < 1) throw DomainError("algebra dimension must be at least 1");
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != n) {
      throw DomainError("structure matrix is not square");
    }
    for (const Scalar& entry : row) {
      if (entry.field() != field) {
        throw DomainError("matrix entry field does not match " +
                          field.to_string());
      }
    }
  }
  if (labels.empty()) {
    labels.reserve(n);
    for (int i = 1; i <= n; ++i) labels.push_back("b" + std::to_string(i));
  } else if (static_cast<int>(labels.size()) != n) {
    throw DomainError("label count does not match dimension");
  }

  EvolutionAlgebra x;
  x.field = field;
  x.dim = n;
  x.matrix = std::move(matrix);
  x.labels = std::move(labels);
  x.det = matrix_determinant(x.matrix, field);
  x.idempotent = !x.det.is_zero();
  return x;
}

bool is_idempotent(const EvolutionAlgebra& x) { return x.idempotent; }

EvolutionAlgebra rescale_basis(const EvolutionAlgebra& x,
                               const std::vector<Scalar>& lambda) {
  if (static_cast<int>(lambda.size()) != x.dim) {
    throw DomainError("rescale factor count does not match dimension");
  }
  for (const Scalar& l : lambda) {
    if (l.field() != x.field) throw DomainError("rescale factor field mismatch");
    if (l.is_zero()) throw DomainError("rescale factors must be nonzero");
  }
  std::vector<std::vector<Scalar>> m(x.dim, std::vector<Scalar>());
  for (int i = 0; i < x.dim; ++i) {
    Scalar li2 = lambda[i] * lambda[i];
    m[i].reserve(x.dim);
    for (int j = 0; j < x.dim; ++j) {
      m[i].push_back(li2 * x.mu(i, j) / lambda[j]);
    }
  }
  return EvolutionAlgebra::create(x.field, std::move(m), x.labels);
}

EvolutionAlgebra permute_basis(const EvolutionAlgebra& x, const Perm& tau) {
  if (tau.degree() != x.dim) {
    throw DomainError("basis permutation degree does not match dimension");
  }
  std::vector<std::vector<Scalar>> m(
      x.dim, std::vector<Scalar>(x.dim, Scalar::zero(x.field)));
  std::vector<std::string> labels(x.dim);
  for (int i = 0; i < x.dim; ++i) {
    labels[tau(i)] = x.labels[i];
    for (int j = 0; j < x.dim; ++j) {
      m[tau(i)][tau(j)] = x.mu(i, j);
    }
  }
  return EvolutionAlgebra::create(x.field, std::move(m), std::move(labels));
}

NaturalIdempotents idempotent_natural_elements(const EvolutionAlgebra& x) {
  if (!x.idempotent) {
    throw DomainError("idempotent_natural_elements requires det != 0");
  }

  std::vector<int> diagonal_rows;
  std::vector<Scalar> lambda(x.dim, Scalar::one(x.field));
  for (int i = 0; i < x.dim; ++i) {
    bool diagonal_only = !x.mu(i, i).is_zero();
    for (int j = 0; diagonal_only && j < x.dim; ++j) {
      if (j != i && !x.mu(i, j).is_zero()) diagonal_only = false;
    }
    if (diagonal_only) {
      diagonal_rows.push_back(i);
      lambda[i] = x.mu(i, i).inverse();
    }
  }

  Perm tau;
  tau.img.assign(x.dim, -1);
  int next = 0;
  for (int i : diagonal_rows) tau.img[i] = next++;
  for (int i = 0; i < x.dim; ++i) {
    if (tau.img[i] < 0) tau.img[i] = next++;
  }

  NaturalIdempotents out;
  out.normalized = permute_basis(rescale_basis(x, lambda), tau);
  out.count = static_cast<int>(diagonal_rows.size());
  out.rescale = std::move(lambda);
  out.reorder = std::move(tau);
  return out;
}

ZeroPatternDigraph zero_pattern_digraph(const EvolutionAlgebra& x) {
  ZeroPatternDigraph g;
  g.n = x.dim;
  g.arc.assign(x.dim, std::vector<bool>(x.dim, false));
  g.out.assign(x.dim, {});
  for (int i = 0; i < x.dim; ++i) {
    for (int j = 0; j < x.dim; ++j) {
      if (!x.mu(i, j).is_zero()) {
        g.arc[i][j] = true;
        g.out[i].push_back(j);
      }
    }
  }
  return g;
}

}  // namespace evokit
