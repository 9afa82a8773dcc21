#include "evokit/realize.hpp"

#include <algorithm>
#include <set>

#include "evokit/errors.hpp"

namespace evokit {

LabeledGraph LabeledGraph::create(int n,
                                  std::vector<std::pair<int, int>> edges,
                                  std::vector<int> tagged) {
  if (n < 1) throw DomainError("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw DomainError("edge endpoint out of range");
    }
    if (a == b) throw DomainError("loops are not allowed");
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) {
      throw DomainError("duplicate edge");
    }
  }
  std::sort(edges.begin(), edges.end());

  if (tagged.empty()) throw DomainError("tagged vertex set must be nonempty");
  std::sort(tagged.begin(), tagged.end());
  tagged.erase(std::unique(tagged.begin(), tagged.end()), tagged.end());
  for (int v : tagged) {
    if (v < 0 || v >= n) throw DomainError("tagged vertex out of range");
  }

  LabeledGraph g;
  g.n = n;
  g.edges = std::move(edges);
  g.tagged = std::move(tagged);
  return g;
}

int LabeledGraph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges) {
    if (a == v || b == v) ++d;
  }
  return d;
}

bool LabeledGraph::adjacent(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

EvolutionAlgebra build_algebra_from_graph(const LabeledGraph& g,
                                          const FieldSpec& field) {
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) < 2) {
      throw DomainError("graph compilation requires minimum degree 2");
    }
  }

  int dim = g.n + static_cast<int>(g.edges.size());
  std::vector<char> is_tagged(g.n, 0);
  for (int v : g.tagged) is_tagged[v] = 1;

  Scalar zero = Scalar::zero(field);
  Scalar one = Scalar::one(field);
  std::vector<std::vector<Scalar>> m(dim, std::vector<Scalar>(dim, zero));
  std::vector<std::string> labels(dim);

  for (int v = 0; v < g.n; ++v) {
    labels[v] = "v" + std::to_string(v + 1);
    m[v][v] = one;
    if (!is_tagged[v]) {
      for (int w : g.tagged) m[v][w] = one;
    }
  }
  for (std::size_t idx = 0; idx < g.edges.size(); ++idx) {
    auto [a, b] = g.edges[idx];
    int row = g.n + static_cast<int>(idx);
    labels[row] =
        "e" + std::to_string(a + 1) + "-" + std::to_string(b + 1);
    m[row][row] = one;
    m[row][a] = one;
    m[row][b] = one;
  }
  return EvolutionAlgebra::create(field, std::move(m), std::move(labels));
}

PermGroup graph_automorphisms(const LabeledGraph& g, bool honor_tags) {
  int n = g.n;
  std::vector<char> is_tagged(n, 0);
  for (int v : g.tagged) is_tagged[v] = 1;
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& [a, b] : g.edges) adj[a][b] = adj[b][a] = 1;

  std::vector<Perm> found;
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == n) {
      found.emplace_back(img);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || deg[w] != deg[v]) continue;
      if (honor_tags && is_tagged[w] != is_tagged[v]) continue;
      bool ok = true;
      for (int u = 0; ok && u < v; ++u) {
        ok = adj[v][u] == adj[w][img[u]];
      }
      if (!ok) continue;
      img[v] = w;
      used[w] = 1;
      self(self, v + 1);
      img[v] = -1;
      used[w] = 0;
    }
  };
  dfs(dfs, 0);

  PermGroup with_all(n, found);
  PermGroup group(n, with_all.reduced_generators());
  if (group.order() != found.size()) {
    throw InternalError("graph automorphism search is not closed");
  }
  return group;
}

namespace {

// Regular (Cayley) permutation representation of the automorphism group,
// used when the permutation parts alone do not separate the elements.
PermGroup cayley_representation(const std::vector<WeightedAutomorphism>& els) {
  int n = static_cast<int>(els.size());
  auto index_of = [&](const WeightedAutomorphism& a) {
    auto it = std::lower_bound(els.begin(), els.end(), a);
    if (it == els.end() || !(*it == a)) {
      throw InternalError("automorphism composition left the group");
    }
    return static_cast<int>(it - els.begin());
  };
  std::vector<Perm> gens;
  gens.reserve(n);
  for (const WeightedAutomorphism& a : els) {
    Perm p;
    p.img.reserve(n);
    for (const WeightedAutomorphism& b : els) {
      p.img.push_back(index_of(compose(a, b)));
    }
    gens.push_back(std::move(p));
  }
  PermGroup with_all(n, gens);
  return PermGroup(n, with_all.reduced_generators());
}

}  // namespace

RealizationReport verify_realization(const LabeledGraph& g,
                                     const FieldSpec& field,
                                     const AutOptions& options) {
  RealizationReport report;

  EvolutionAlgebra x = build_algebra_from_graph(g, field);
  PermGroup graph_group = graph_automorphisms(g, true);
  report.graph_aut_order = graph_group.order();

  PermGroup untagged_group = graph_automorphisms(g, false);
  report.tagged_invariant = true;
  std::vector<char> is_tagged(g.n, 0);
  for (int v : g.tagged) is_tagged[v] = 1;
  for (const Perm& s : untagged_group.generators()) {
    for (int v : g.tagged) {
      if (!is_tagged[s(v)]) {
        report.tagged_invariant = false;
        break;
      }
    }
    if (!report.tagged_invariant) break;
  }

  AutomorphismGroup aut = automorphism_group(x, options);
  report.algebra_aut_order = aut.elements.size();

  NaturalIdempotents nat = idempotent_natural_elements(x);
  report.idempotent_count = nat.count;

  PermGroup algebra_side =
      aut.faithful ? aut.image : cayley_representation(aut.elements);
  report.isomorphic = are_isomorphic_small(algebra_side, graph_group);

  if (report.tagged_invariant) {
    PermGroup restricted_algebra = rho_tilde(x, options);

    // The tagged vertices, in ascending order, are exactly the basis
    // lines that the normalization moves to the front, so both restricted
    // actions live on the same index set.
    std::vector<int> pos(g.n, -1);
    for (std::size_t i = 0; i < g.tagged.size(); ++i) pos[g.tagged[i]] = static_cast<int>(i);
    std::vector<Perm> restricted_gens;
    for (const Perm& s : graph_group.generators()) {
      Perm r;
      r.img.resize(g.tagged.size());
      for (std::size_t i = 0; i < g.tagged.size(); ++i) {
        r.img[i] = pos[s(g.tagged[i])];
      }
      restricted_gens.push_back(std::move(r));
    }
    PermGroup restricted_graph(static_cast<int>(g.tagged.size()),
                               restricted_gens);
    report.representations_equivalent =
        equivalence_of_representations(restricted_algebra, restricted_graph)
            .has_value();
  }

  report.success = report.tagged_invariant && report.isomorphic &&
                   report.representations_equivalent &&
                   report.idempotent_count ==
                       static_cast<int>(g.tagged.size());
  return report;
}

LabeledGraph builtin_graph(const std::string& family, int n,
                           std::vector<int> tagged) {
  if (family != "cycle" && family != "complete" &&
      family != "cycle_with_tags") {
    throw DomainError("unknown graph family: " + family);
  }
  if (family != "cycle_with_tags" && !tagged.empty()) {
    throw DomainError("family " + family + " tags every vertex");
  }
  if (n < 3) {
    throw DomainError("family " + family + " requires n >= 3");
  }

  std::vector<std::pair<int, int>> edges;
  if (family == "complete") {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
    }
  } else {
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  }

  if (family != "cycle_with_tags") {
    tagged.resize(n);
    for (int v = 0; v < n; ++v) tagged[v] = v;
  }
  return LabeledGraph::create(n, std::move(edges), std::move(tagged));
}

}  // namespace evokit
