#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "evokit/errors.hpp"

namespace evokit {

// Permutation of {0, ..., n-1}, stored as its image array.  Composition is
// right-to-left: (a * b)(x) = a(b(x)).  File formats use 1-based images.
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> image) : img(std::move(image)) {}

  static Perm identity(int n) {
    Perm p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
  }

  // 1-based image array as used in group files and reports.
  static Perm from_one_based(const std::vector<int>& image) {
    int n = static_cast<int>(image.size());
    std::vector<int> seen(n, 0);
    Perm p;
    p.img.reserve(n);
    for (int v : image) {
      if (v < 1 || v > n || seen[v - 1]) {
        throw DomainError("image array is not a permutation of 1..n");
      }
      seen[v - 1] = 1;
      p.img.push_back(v - 1);
    }
    return p;
  }

  // Cycle notation convenience, 1-based points: {{1,2},{3,4,5}}.
  static Perm from_cycles(int n,
                          std::initializer_list<std::initializer_list<int>> cs) {
    Perm p = identity(n);
    for (const auto& cycle : cs) {
      const int* data = cycle.begin();
      int len = static_cast<int>(cycle.size());
      for (int i = 0; i < len; ++i) {
        int from = data[i] - 1;
        int to = data[(i + 1) % len] - 1;
        if (from < 0 || from >= n || to < 0 || to >= n) {
          throw DomainError("cycle point out of range");
        }
        p.img[from] = to;
      }
    }
    return p;
  }

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i]; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i) {
      if (img[i] != i) return false;
    }
    return true;
  }

  Perm inverse() const {
    Perm p;
    p.img.resize(img.size());
    for (int i = 0; i < degree(); ++i) p.img[img[i]] = i;
    return p;
  }

  std::vector<int> to_one_based() const {
    std::vector<int> out;
    out.reserve(img.size());
    for (int v : img) out.push_back(v + 1);
    return out;
  }

  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) {
      throw DomainError("composing permutations of different degrees");
    }
    Perm p;
    p.img.resize(a.img.size());
    for (int i = 0; i < a.degree(); ++i) p.img[i] = a.img[b.img[i]];
    return p;
  }

  auto operator<=>(const Perm&) const = default;
};

// Cycle lengths in decreasing order, fixed points included.
std::vector<int> cycle_type(const Perm& p);

// Multiplicative order (lcm of cycle lengths).
std::uint64_t element_order(const Perm& p);

}  // namespace evokit
