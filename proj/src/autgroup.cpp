#include "evokit/autgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <utility>

#include "evokit/errors.hpp"

namespace evokit {

namespace {

void require_weights(const EvolutionAlgebra& x, const Perm& sigma,
                     const std::vector<Scalar>& lambda) {
  if (sigma.degree() != x.dim) {
    throw DomainError("permutation degree does not match algebra dimension");
  }
  if (static_cast<int>(lambda.size()) != x.dim) {
    throw DomainError("weight count does not match algebra dimension");
  }
  for (const Scalar& l : lambda) {
    if (l.field() != x.field) throw DomainError("weight field mismatch");
  }
}

bool respects_zero_pattern(const EvolutionAlgebra& x, const Perm& sigma) {
  for (int i = 0; i < x.dim; ++i) {
    for (int j = 0; j < x.dim; ++j) {
      if (x.mu(i, j).is_zero() != x.mu(sigma(i), sigma(j)).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

bool lambda_less(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = a[i].cmp(b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

WeightedAutomorphism compose(const WeightedAutomorphism& a,
                             const WeightedAutomorphism& b) {
  int n = a.sigma.degree();
  if (b.sigma.degree() != n) {
    throw DomainError("composing automorphisms of different dimensions");
  }
  WeightedAutomorphism out;
  out.sigma = a.sigma * b.sigma;
  out.lambda.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.lambda.push_back(b.lambda[i] * a.lambda[b.sigma(i)]);
  }
  return out;
}

WeightedAutomorphism inverse(const WeightedAutomorphism& a) {
  WeightedAutomorphism out;
  out.sigma = a.sigma.inverse();
  out.lambda.reserve(a.lambda.size());
  for (int j = 0; j < a.sigma.degree(); ++j) {
    out.lambda.push_back(a.lambda[out.sigma(j)].inverse());
  }
  return out;
}

bool check_automorphism(const EvolutionAlgebra& x, const Perm& sigma,
                        const std::vector<Scalar>& lambda) {
  require_weights(x, sigma, lambda);
  for (const Scalar& l : lambda) {
    if (l.is_zero()) return false;
  }
  for (int i = 0; i < x.dim; ++i) {
    Scalar li2 = lambda[i] * lambda[i];
    for (int j = 0; j < x.dim; ++j) {
      if (!(lambda[j] * x.mu(i, j) == li2 * x.mu(sigma(i), sigma(j)))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Scalar> lambda_from_diagonal(const EvolutionAlgebra& x,
                                         const Perm& sigma) {
  if (sigma.degree() != x.dim) {
    throw DomainError("permutation degree does not match algebra dimension");
  }
  for (int i = 0; i < x.dim; ++i) {
    if (x.mu(i, i).is_zero()) {
      throw DomainError("lambda_from_diagonal requires all diagonal entries nonzero");
    }
  }
  std::vector<Scalar> lambda;
  lambda.reserve(x.dim);
  for (int i = 0; i < x.dim; ++i) {
    lambda.push_back(x.mu(i, i) / x.mu(sigma(i), sigma(i)));
  }
  return lambda;
}

Scalar lambda_B(const EvolutionAlgebra& x, const Perm& sigma, int i, int j,
                int k) {
  if (x.dim < 3) throw DomainError("lambda_B requires dimension >= 3");
  if (sigma.degree() != x.dim) {
    throw DomainError("permutation degree does not match algebra dimension");
  }
  if (i == j || j == k || i == k) {
    throw DomainError("lambda_B requires pairwise distinct indices");
  }
  if (i < 0 || j < 0 || k < 0 || i >= x.dim || j >= x.dim || k >= x.dim) {
    throw DomainError("lambda_B index out of range");
  }
  const Scalar& d1 = x.mu(sigma(i), sigma(k));
  const Scalar& d2 = x.mu(j, k);
  const Scalar& d3 = x.mu(sigma(j), sigma(i));
  if (d1.is_zero() || d2.is_zero() || d3.is_zero()) {
    throw DomainError("lambda_B denominator entry is zero");
  }
  return (x.mu(i, k) / d1) * (x.mu(sigma(j), sigma(k)) / d2) *
         (x.mu(j, i) / d3);
}

namespace {

// One forward-closed piece of the zero-pattern digraph.  Within a region
// every weight is lambda_v = coeff[v] * t^(2^depth[v]) for a single
// unknown t; arcs that leave the spanning tree yield conditions t^e = c.
struct Condition {
  std::int64_t e;
  Scalar c;
};

struct BoundaryArc {
  std::int64_t e;
  Scalar factor;
  int dst;  // vertex of an earlier region; condition is t^e = lambda[dst] * factor
};

struct Region {
  std::vector<int> vertices;  // discovery order, root first
  std::vector<Scalar> coeff;
  std::vector<int> depth;
  std::vector<Condition> internal;
  std::vector<BoundaryArc> boundary;
};

}  // namespace

std::vector<std::vector<Scalar>> solve_lambda_by_propagation(
    const EvolutionAlgebra& x, const Perm& sigma) {
  const int n = x.dim;
  if (sigma.degree() != n) {
    throw DomainError("permutation degree does not match algebra dimension");
  }
  if (n > 62) {
    throw CapExceeded("dimension too large for weight propagation exponents");
  }
  if (!respects_zero_pattern(x, sigma)) return {};

  const FieldSpec& f = x.field;
  ZeroPatternDigraph g = zero_pattern_digraph(x);
  auto ratio = [&](int u, int v) {
    return x.mu(sigma(u), sigma(v)) / x.mu(u, v);
  };

  // Peel off forward-reachable regions.  Arcs from an earlier region into
  // a later one cannot exist: such a vertex would have been absorbed when
  // the earlier region was explored.
  std::vector<int> region_of(n, -1);
  std::vector<int> pos_in_region(n, -1);
  std::vector<Region> regions;
  for (int root = 0; root < n; ++root) {
    if (region_of[root] >= 0) continue;
    int rid = static_cast<int>(regions.size());
    Region r;
    region_of[root] = rid;
    pos_in_region[root] = 0;
    r.vertices = {root};
    r.coeff = {Scalar::one(f)};
    r.depth = {0};
    for (std::size_t head = 0; head < r.vertices.size(); ++head) {
      int u = r.vertices[head];
      Scalar au = r.coeff[head];
      int du = r.depth[head];
      for (int v : g.out[u]) {
        Scalar cuv = ratio(u, v);
        if (region_of[v] < 0) {
          region_of[v] = rid;
          pos_in_region[v] = static_cast<int>(r.vertices.size());
          r.vertices.push_back(v);
          r.coeff.push_back(au * au * cuv);
          r.depth.push_back(du + 1);
        } else if (region_of[v] == rid) {
          int pv = pos_in_region[v];
          std::int64_t e =
              (std::int64_t{1} << (du + 1)) - (std::int64_t{1} << r.depth[pv]);
          r.internal.push_back({e, r.coeff[pv] / (au * au * cuv)});
        } else {
          std::int64_t e = std::int64_t{1} << (du + 1);
          r.boundary.push_back({e, (au * au * cuv).inverse(), v});
        }
      }
    }
    regions.push_back(std::move(r));
  }

  std::vector<std::vector<Scalar>> found;
  std::vector<Scalar> lam(n, Scalar::zero(f));
  auto rec = [&](auto&& self, std::size_t ridx) -> void {
    if (ridx == regions.size()) {
      found.push_back(lam);
      return;
    }
    const Region& r = regions[ridx];
    std::vector<Condition> conds = r.internal;
    for (const BoundaryArc& b : r.boundary) {
      conds.push_back({b.e, lam[b.dst] * b.factor});
    }

    const Condition* pivot = nullptr;
    for (const Condition& c : conds) {
      if (c.e == 0) {
        if (!c.c.is_one()) return;  // inconsistent branch, no solutions
      } else if (pivot == nullptr) {
        pivot = &c;
      }
    }
    if (pivot == nullptr) {
      throw InternalError(
          "weight propagation left a free parameter; the algebra cannot be "
          "idempotent");
    }

    std::int64_t e = pivot->e;
    Scalar c = pivot->c;
    if (e < 0) {
      e = -e;
      c = c.inverse();
    }
    for (const Scalar& t : nth_roots(c, static_cast<std::uint64_t>(e))) {
      bool ok = true;
      for (const Condition& cond : conds) {
        if (!(t.pow(cond.e) == cond.c)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (std::size_t p = 0; p < r.vertices.size(); ++p) {
        lam[r.vertices[p]] =
            r.coeff[p] * t.pow(std::int64_t{1} << r.depth[p]);
      }
      self(self, ridx + 1);
    }
  };
  rec(rec, 0);

  std::vector<std::vector<Scalar>> out;
  for (auto& l : found) {
    if (check_automorphism(x, sigma, l)) out.push_back(std::move(l));
  }
  std::sort(out.begin(), out.end(), lambda_less);
  return out;
}

std::vector<std::vector<Scalar>> solve_lambda(const EvolutionAlgebra& x,
                                              const Perm& sigma) {
  const int n = x.dim;
  if (sigma.degree() != n) {
    throw DomainError("permutation degree does not match algebra dimension");
  }
  if (!respects_zero_pattern(x, sigma)) return {};

  bool all_diag = true;
  for (int i = 0; all_diag && i < n; ++i) {
    if (x.mu(i, i).is_zero()) all_diag = false;
  }
  if (all_diag) {
    std::vector<Scalar> lam = lambda_from_diagonal(x, sigma);
    if (check_automorphism(x, sigma, lam)) return {std::move(lam)};
    return {};
  }

  if (n >= 3) {
    bool all_off = true;
    for (int i = 0; all_off && i < n; ++i) {
      for (int j = 0; all_off && j < n; ++j) {
        if (i != j && x.mu(i, j).is_zero()) all_off = false;
      }
    }
    if (all_off) {
      std::vector<Scalar> lam;
      lam.reserve(n);
      for (int i = 0; i < n; ++i) {
        int j = (i == 0) ? 1 : 0;
        int k = (i == 0 || i == 1) ? 2 : 1;
        lam.push_back(lambda_B(x, sigma, i, j, k));
      }
      if (check_automorphism(x, sigma, lam)) return {std::move(lam)};
      return {};
    }
  }

  return solve_lambda_by_propagation(x, sigma);
}

namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const char* env = std::getenv("EVOKIT_THREADS");
  if (env != nullptr) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

struct RowSignature {
  int nonzeros = 0;
  bool diag_zero = false;
  bool operator==(const RowSignature&) const = default;
};

// Depth-first search over candidate images of the basis indices in
// lexicographic order.  A candidate must match the row signature and keep
// the zero pattern consistent with every index decided so far; surviving
// full permutations go through solve_lambda.
struct SigmaSearch {
  const EvolutionAlgebra& x;
  const std::vector<std::vector<int>>& candidates;
  const std::vector<std::vector<bool>>& arc;

  void extend(std::vector<int>& img, std::vector<char>& used, int i,
              std::vector<WeightedAutomorphism>& sink) const {
    int n = x.dim;
    if (i == n) {
      Perm sigma(img);
      for (auto& lam : solve_lambda(x, sigma)) {
        sink.push_back({sigma, std::move(lam)});
      }
      return;
    }
    for (int k : candidates[i]) {
      if (used[k]) continue;
      bool ok = arc[i][i] == arc[k][k];
      for (int j = 0; ok && j < i; ++j) {
        ok = arc[i][j] == arc[k][img[j]] && arc[j][i] == arc[img[j]][k];
      }
      if (!ok) continue;
      img[i] = k;
      used[k] = 1;
      extend(img, used, i + 1, sink);
      img[i] = -1;
      used[k] = 0;
    }
  }
};

std::uint64_t factorial64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

AutomorphismGroup automorphism_group(const EvolutionAlgebra& x,
                                     const AutOptions& options) {
  if (!x.idempotent) {
    throw DomainError("automorphism search requires an idempotent algebra");
  }
  const int n = x.dim;
  int max_dim = std::min(options.max_dim, 62);
  if (n > max_dim) {
    throw CapExceeded("dimension " + std::to_string(n) +
                      " exceeds automorphism search cap " +
                      std::to_string(max_dim));
  }

  ZeroPatternDigraph g = zero_pattern_digraph(x);
  std::vector<RowSignature> sig(n);
  for (int i = 0; i < n; ++i) {
    sig[i].nonzeros = static_cast<int>(g.out[i].size());
    sig[i].diag_zero = !g.arc[i][i];
  }
  std::vector<std::vector<int>> candidates(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (sig[k] == sig[i]) candidates[i].push_back(k);
    }
  }

  SigmaSearch search{x, candidates, g.arc};
  std::vector<WeightedAutomorphism> elements;

  int threads = std::min<int>(resolve_threads(options.threads),
                              static_cast<int>(candidates[0].size()));
  if (threads <= 1 || n < 2) {
    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    search.extend(img, used, 0, elements);
  } else {
    // Top-level branches (choices of the image of index 0) are split
    // across workers; the final sort keeps the result deterministic.
    std::vector<std::vector<WeightedAutomorphism>> sinks(threads);
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w]() {
        std::vector<int> img(n, -1);
        std::vector<char> used(n, 0);
        for (std::size_t idx = w; idx < candidates[0].size();
             idx += static_cast<std::size_t>(threads)) {
          int k = candidates[0][idx];
          if (g.arc[0][0] != g.arc[k][k]) continue;
          img[0] = k;
          used[k] = 1;
          search.extend(img, used, 1, sinks[w]);
          img[0] = -1;
          used[k] = 0;
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& sink : sinks) {
      elements.insert(elements.end(), std::make_move_iterator(sink.begin()),
                      std::make_move_iterator(sink.end()));
    }
  }

  std::sort(elements.begin(), elements.end());

  AutomorphismGroup out;
  out.elements = std::move(elements);
  if (out.elements.empty()) {
    throw InternalError("automorphism search lost the identity");
  }

  std::vector<Perm> sigmas;
  for (const WeightedAutomorphism& a : out.elements) {
    if (a.sigma.is_identity()) out.kernel.push_back(a);
    if (sigmas.empty() || !(sigmas.back() == a.sigma)) {
      sigmas.push_back(a.sigma);
    }
  }
  if (out.kernel.empty()) {
    throw InternalError("automorphism search lost the identity");
  }

  PermGroup with_all(n, sigmas);
  out.image = PermGroup(n, with_all.reduced_generators());
  out.faithful = out.kernel.size() == 1;
  out.full = n <= 20 && out.image.order() == factorial64(n);

  if (out.image.order() * out.kernel.size() != out.elements.size()) {
    throw InternalError("kernel size times image order is not the group order");
  }
  return out;
}

std::vector<WeightedAutomorphism> kernel_elements(const EvolutionAlgebra& x) {
  if (!x.idempotent) {
    throw DomainError("kernel computation requires an idempotent algebra");
  }
  Perm id = Perm::identity(x.dim);
  std::vector<WeightedAutomorphism> out;
  for (auto& lam : solve_lambda(x, id)) {
    out.push_back({id, std::move(lam)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

RhoResult rho(const EvolutionAlgebra& x, const AutOptions& options) {
  AutomorphismGroup a = automorphism_group(x, options);
  return {std::move(a.image), a.faithful};
}

PermGroup rho_tilde(const EvolutionAlgebra& x, const AutOptions& options) {
  NaturalIdempotents nat = idempotent_natural_elements(x);
  if (nat.count == 0) return PermGroup(0, {});

  AutomorphismGroup a = automorphism_group(nat.normalized, options);
  std::vector<Perm> restricted;
  for (const WeightedAutomorphism& e : a.elements) {
    Perm r;
    r.img.reserve(nat.count);
    for (int i = 0; i < nat.count; ++i) {
      if (e.sigma(i) >= nat.count) {
        throw InternalError(
            "an automorphism moved an idempotent basis line off the "
            "idempotent block");
      }
      r.img.push_back(e.sigma(i));
    }
    if (restricted.empty() || !(restricted.back() == r)) {
      restricted.push_back(std::move(r));
    }
  }
  PermGroup with_all(nat.count, restricted);
  return PermGroup(nat.count, with_all.reduced_generators());
}

}  // namespace evokit
