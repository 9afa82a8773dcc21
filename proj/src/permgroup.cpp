#include "evokit/permgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "evokit/errors.hpp"

namespace evokit {

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  if (degree < 0) throw DomainError("negative permutation degree");
  for (const Perm& g : gens_) {
    if (g.degree() != degree_) {
      throw DomainError("generator degree does not match group degree");
    }
  }
  for (const Perm& g : gens_) insert(g, 0);
}

// Incremental Schreier-Sims.  Sift g through the chain; a nonzero residue
// becomes a strong generator at the level where it escaped the transversal,
// after which the whole chain is re-closed.
void PermGroup::insert(Perm g, std::size_t from_level) {
  auto [residue, stuck] = sift_from(std::move(g), from_level);
  if (residue.is_identity()) return;
  assign(std::move(residue), stuck);
  close_chain(stuck);
}

std::pair<Perm, std::size_t> PermGroup::sift_from(Perm g, std::size_t from) const {
  std::size_t i = from;
  while (i < levels_.size() && !g.is_identity()) {
    const Level& lvl = levels_[i];
    auto it = lvl.transversal.find(g(lvl.base));
    if (it == lvl.transversal.end()) break;
    g = it->second.inverse() * g;
    ++i;
  }
  return {std::move(g), i};
}

void PermGroup::assign(Perm g, std::size_t level) {
  if (level == levels_.size()) {
    Level fresh;
    for (int p = 0; p < degree_; ++p) {
      if (g(p) != p) {
        fresh.base = p;
        break;
      }
    }
    fresh.transversal.emplace(fresh.base, Perm::identity(degree_));
    levels_.push_back(std::move(fresh));
  }
  levels_[level].gens.push_back(std::move(g));
}

// A generator assigned to level j fixes the bases of every shallower level,
// so it also acts at each level i <= j: the orbit of base i is taken under
// the generators stored at levels i and deeper.  Verification sweeps from
// `top` toward the root, rebuilding each orbit and sifting every Schreier
// generator.  A nonzero residue always lands strictly deeper and leaves the
// levels below it intact, so the sweep resumes at the residue's level;
// its next rebuild absorbs the new generator, which bounds the number of
// assignments by the orbit growth they force.
void PermGroup::close_chain(std::size_t top) {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(top);
  while (i >= 0) {
    std::vector<Perm> gens;
    for (std::size_t j = i; j < levels_.size(); ++j) {
      gens.insert(gens.end(), levels_[j].gens.begin(), levels_[j].gens.end());
    }
    {
      Level& lvl = levels_[i];
      lvl.transversal.clear();
      lvl.transversal.emplace(lvl.base, Perm::identity(degree_));
      std::vector<int> queue = {lvl.base};
      for (std::size_t head = 0; head < queue.size(); ++head) {
        int p = queue[head];
        Perm up = lvl.transversal.at(p);
        for (const Perm& s : gens) {
          int q = s(p);
          if (!lvl.transversal.count(q)) {
            lvl.transversal.emplace(q, s * up);
            queue.push_back(q);
          }
        }
      }
    }
    // assign() can reallocate the level vector, so sift against copies.
    const std::map<int, Perm> transversal = levels_[i].transversal;
    std::ptrdiff_t next = i - 1;
    for (const auto& [p, up] : transversal) {
      for (const Perm& s : gens) {
        auto [residue, stuck] =
            sift_from(transversal.at(s(p)).inverse() * s * up, i + 1);
        if (!residue.is_identity()) {
          assign(std::move(residue), stuck);
          next = static_cast<std::ptrdiff_t>(stuck);
          break;
        }
      }
      if (next > i - 1) break;
    }
    i = next;
  }
}

std::uint64_t PermGroup::order() const {
  std::uint64_t ord = 1;
  for (const Level& lvl : levels_) {
    std::uint64_t size = lvl.transversal.size();
    if (ord > UINT64_MAX / size) throw CapExceeded("group order overflows");
    ord *= size;
  }
  return ord;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) {
    throw DomainError("membership test across different degrees");
  }
  Perm g = p;
  for (const Level& lvl : levels_) {
    if (g.is_identity()) return true;
    auto it = lvl.transversal.find(g(lvl.base));
    if (it == lvl.transversal.end()) return false;
    g = it->second.inverse() * g;
  }
  return g.is_identity();
}

std::vector<Perm> PermGroup::reduced_generators() const {
  std::vector<Perm> kept;
  PermGroup partial(degree_, {});
  for (const Perm& g : gens_) {
    if (g.is_identity() || partial.contains(g)) continue;
    kept.push_back(g);
    partial.insert(Perm(g), 0);
  }
  return kept;
}

std::vector<Perm> PermGroup::elements(std::uint64_t max_count) const {
  if (order() > max_count) {
    throw CapExceeded("group order " + std::to_string(order()) +
                      " exceeds enumeration cap " + std::to_string(max_count));
  }
  std::vector<Perm> out = {Perm::identity(degree_)};
  for (auto lvl = levels_.rbegin(); lvl != levels_.rend(); ++lvl) {
    std::vector<Perm> next;
    next.reserve(out.size() * lvl->transversal.size());
    for (const auto& [p, up] : lvl->transversal) {
      for (const Perm& tail : out) next.push_back(up * tail);
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PermGroup::is_k_transitive(int k, const TransitivityCaps& caps) const {
  if (k < 1 || k > degree_) {
    throw DomainError("transitivity level k must satisfy 1 <= k <= degree");
  }
  if (degree_ > caps.max_degree) {
    throw CapExceeded("degree " + std::to_string(degree_) +
                      " exceeds transitivity cap " +
                      std::to_string(caps.max_degree));
  }
  if (k > caps.max_k) {
    throw CapExceeded("transitivity level " + std::to_string(k) +
                      " exceeds cap " + std::to_string(caps.max_k));
  }

  std::uint64_t n = degree_;
  std::uint64_t target = 1;
  for (int i = 0; i < k; ++i) target *= n - i;

  // Tuples of distinct points are encoded in base n; the orbit never
  // leaves the distinct-entry tuples, so its size is at most `target`.
  // A dense visited bitmap covers the default caps; raised caps fall
  // back to a hash set.
  std::uint64_t code_space = 1;
  bool dense = true;
  for (int i = 0; i < k; ++i) {
    if (code_space > (std::uint64_t{1} << 30) / n) {
      dense = false;
      break;
    }
    code_space *= n;
  }

  auto encode = [n](const std::vector<int>& tuple) {
    std::uint64_t code = 0;
    for (int v : tuple) code = code * n + static_cast<std::uint64_t>(v);
    return code;
  };

  std::vector<bool> dense_visited(dense ? code_space : 0, false);
  std::unordered_set<std::uint64_t> sparse_visited;
  auto mark = [&](std::uint64_t code) {
    if (dense) {
      if (dense_visited[code]) return false;
      dense_visited[code] = true;
      return true;
    }
    return sparse_visited.insert(code).second;
  };

  std::vector<int> start(k);
  for (int i = 0; i < k; ++i) start[i] = i;
  mark(encode(start));
  std::vector<std::vector<int>> queue = {start};
  std::uint64_t count = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (count == target) return true;
    std::vector<int> tuple = queue[head];
    for (const Perm& g : gens_) {
      std::vector<int> image(k);
      for (int i = 0; i < k; ++i) image[i] = g(tuple[i]);
      if (mark(encode(image))) {
        ++count;
        queue.push_back(std::move(image));
      }
    }
  }
  return count == target;
}

int PermGroup::transitivity_degree(const TransitivityCaps& caps) const {
  for (int k = 1; k <= degree_; ++k) {
    if (k > caps.max_k) {
      throw CapExceeded(
          "transitivity degree still rising at the configured cap k = " +
          std::to_string(caps.max_k));
    }
    if (!is_k_transitive(k, caps)) return k - 1;
  }
  return degree_;
}

namespace {

// Orbit partition of {0..n-1} under a list of permutations; returns the
// orbit id of each point plus each orbit's size.
struct Orbits {
  std::vector<int> id;
  std::vector<int> size;
};

Orbits point_orbits(int n, const std::vector<Perm>& gens) {
  Orbits o;
  o.id.assign(n, -1);
  for (int start = 0; start < n; ++start) {
    if (o.id[start] >= 0) continue;
    int oid = static_cast<int>(o.size.size());
    o.size.push_back(0);
    std::vector<int> queue = {start};
    o.id[start] = oid;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int p = queue[head];
      ++o.size[oid];
      for (const Perm& g : gens) {
        if (o.id[g(p)] < 0) {
          o.id[g(p)] = oid;
          queue.push_back(g(p));
        }
      }
    }
  }
  return o;
}

// Small generating set chosen greedily from the element list, trying
// high-order elements first so that two or three usually suffice.
std::vector<Perm> greedy_generators(int degree, const std::vector<Perm>& elements) {
  std::vector<Perm> ordered = elements;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Perm& a, const Perm& b) {
                     return element_order(a) > element_order(b);
                   });
  std::vector<Perm> gens;
  PermGroup partial(degree, {});
  std::uint64_t goal = elements.size();
  for (const Perm& e : ordered) {
    if (partial.order() == goal) break;
    if (e.is_identity() || partial.contains(e)) continue;
    gens.push_back(e);
    partial = PermGroup(degree, gens);
  }
  return gens;
}

// Puts `pivot` in front of its candidate list when present, so that equal
// groups are matched by the identity relabeling first.
void prefer_exact_match(std::vector<Perm>* candidates, const Perm& pivot) {
  auto it = std::find(candidates->begin(), candidates->end(), pivot);
  if (it != candidates->end()) std::rotate(candidates->begin(), it, it + 1);
}

// Extends tau over the orbits of <h_1..h_k> so that tau(h_a(x)) =
// g_a(tau(x)); values are chosen per orbit representative with
// backtracking.  Returns true when a full bijection is reached.
struct ConjugationSearch {
  int n;
  const std::vector<Perm>& g;  // targets in G1
  const std::vector<Perm>& h;  // chosen preimages in G2
  Orbits h_orbits;
  Orbits g_orbits;
  std::vector<int> tau;
  std::vector<char> used;

  bool assign_orbit(int rep, int value) {
    std::vector<std::pair<int, int>> placed;
    std::vector<int> queue = {rep};
    tau[rep] = value;
    used[value] = 1;
    placed.push_back({rep, value});
    bool ok = true;
    for (std::size_t head = 0; ok && head < queue.size(); ++head) {
      int x = queue[head];
      for (std::size_t a = 0; a < h.size(); ++a) {
        int y = h[a](x);
        int w = g[a](tau[x]);
        if (tau[y] < 0) {
          if (used[w]) {
            ok = false;
            break;
          }
          tau[y] = w;
          used[w] = 1;
          placed.push_back({y, w});
          queue.push_back(y);
        } else if (tau[y] != w) {
          ok = false;
          break;
        }
      }
    }
    if (ok && search()) return true;
    for (auto [x, w] : placed) {
      tau[x] = -1;
      used[w] = 0;
    }
    return false;
  }

  bool search() {
    int rep = -1;
    for (int x = 0; x < n; ++x) {
      if (tau[x] < 0) {
        rep = x;
        break;
      }
    }
    if (rep < 0) return true;
    int orbit_size = h_orbits.size[h_orbits.id[rep]];
    std::vector<int> values;
    if (!used[rep] && g_orbits.size[g_orbits.id[rep]] == orbit_size) {
      values.push_back(rep);
    }
    for (int v = 0; v < n; ++v) {
      if (v != rep && !used[v] && g_orbits.size[g_orbits.id[v]] == orbit_size) {
        values.push_back(v);
      }
    }
    for (int v : values) {
      if (assign_orbit(rep, v)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<Perm> equivalence_of_representations(const PermGroup& g1,
                                                   const PermGroup& g2,
                                                   std::uint64_t max_enumeration) {
  if (g1.degree() != g2.degree()) return std::nullopt;
  if (g1.order() != g2.order()) return std::nullopt;
  int n = g1.degree();
  if (g1.order() == 1) return Perm::identity(n);

  std::vector<Perm> els1 = g1.elements(max_enumeration);
  std::vector<Perm> els2 = g2.elements(max_enumeration);
  std::vector<Perm> gens = greedy_generators(n, els1);

  std::vector<std::vector<Perm>> candidates(gens.size());
  for (std::size_t a = 0; a < gens.size(); ++a) {
    std::vector<int> type = cycle_type(gens[a]);
    for (const Perm& e : els2) {
      if (cycle_type(e) == type) candidates[a].push_back(e);
    }
    if (candidates[a].empty()) return std::nullopt;
    prefer_exact_match(&candidates[a], gens[a]);
  }

  std::vector<Perm> chosen(gens.size());
  std::optional<Perm> found;
  auto dfs = [&](auto&& self, std::size_t a) -> bool {
    if (a == gens.size()) {
      ConjugationSearch cs{n,
                           gens,
                           chosen,
                           point_orbits(n, chosen),
                           point_orbits(n, gens),
                           std::vector<int>(n, -1),
                           std::vector<char>(n, 0)};
      if (!cs.search()) return false;
      Perm tau(cs.tau);
      for (std::size_t b = 0; b < gens.size(); ++b) {
        if (!(tau * chosen[b] == gens[b] * tau)) {
          throw InternalError("conjugation propagation produced a bad map");
        }
      }
      found = tau;
      return true;
    }
    for (const Perm& h : candidates[a]) {
      chosen[a] = h;
      if (self(self, a + 1)) return true;
    }
    return false;
  };
  dfs(dfs, 0);
  return found;
}

bool are_isomorphic_small(const PermGroup& g1, const PermGroup& g2,
                          std::uint64_t max_order) {
  if (g1.order() > max_order || g2.order() > max_order) {
    throw CapExceeded("group order exceeds isomorphism cap " +
                      std::to_string(max_order));
  }
  if (g1.order() != g2.order()) return false;
  if (g1.order() == 1) return true;

  std::vector<Perm> els1 = g1.elements(max_order);
  std::vector<Perm> els2 = g2.elements(max_order);

  std::vector<std::uint64_t> orders1, orders2;
  for (const Perm& e : els1) orders1.push_back(element_order(e));
  for (const Perm& e : els2) orders2.push_back(element_order(e));
  std::sort(orders1.begin(), orders1.end());
  std::sort(orders2.begin(), orders2.end());
  if (orders1 != orders2) return false;

  std::vector<Perm> gens = greedy_generators(g1.degree(), els1);
  std::vector<std::vector<Perm>> candidates(gens.size());
  for (std::size_t a = 0; a < gens.size(); ++a) {
    std::uint64_t ord = element_order(gens[a]);
    for (const Perm& e : els2) {
      if (element_order(e) == ord) candidates[a].push_back(e);
    }
    if (candidates[a].empty()) return false;
  }

  // Closure of the partial map g_a -> h_a over products: the map extends
  // to an isomorphism iff propagating m(x * g_a) = m(x) * h_a from the
  // identity meets no conflict and ends bijective.
  std::vector<Perm> chosen(gens.size());
  auto closes = [&]() {
    std::map<Perm, Perm> forward;
    std::map<Perm, Perm> backward;
    Perm id1 = Perm::identity(g1.degree());
    Perm id2 = Perm::identity(g2.degree());
    forward.emplace(id1, id2);
    backward.emplace(id2, id1);
    std::vector<Perm> queue = {id1};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Perm x = queue[head];
      const Perm& mx = forward.at(x);
      for (std::size_t a = 0; a < gens.size(); ++a) {
        Perm y = x * gens[a];
        Perm my = mx * chosen[a];
        auto it = forward.find(y);
        if (it != forward.end()) {
          if (!(it->second == my)) return false;
          continue;
        }
        auto back = backward.find(my);
        if (back != backward.end()) return false;
        forward.emplace(y, my);
        backward.emplace(my, y);
        queue.push_back(std::move(y));
      }
    }
    return forward.size() == els1.size();
  };

  auto dfs = [&](auto&& self, std::size_t a) -> bool {
    if (a == gens.size()) return closes();
    for (const Perm& h : candidates[a]) {
      chosen[a] = h;
      if (self(self, a + 1)) return true;
    }
    return false;
  };
  return dfs(dfs, 0);
}

}  // namespace evokit
