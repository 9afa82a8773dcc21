#include <doctest.h>
#include <evokit/errors.hpp>
#include <evokit/fixtures.hpp>
#include <evokit/io.hpp>
#include <evokit/oracle.hpp>

#include <random>

#include "helpers.hpp"

using namespace evokit;
using evotest::alg;
using evotest::alg_gf;
using evotest::GF;
using evotest::Q;

TEST_CASE("oracle lists the two automorphisms of the plane identity algebra") {
  auto x = identity_algebra(2, GF(3));
  auto out = brute_force_automorphisms(x);
  REQUIRE(out.size() == 2);
  CHECK(out[0].sigma.is_identity());
  CHECK(out[1].sigma == Perm::from_cycles(2, {{1, 2}}));
  for (const auto& a : out) {
    for (const auto& l : a.lambda) CHECK(l.is_one());
  }
}

TEST_CASE("oracle counts for the swap algebra depend on cube roots of unity") {
  CHECK(brute_force_automorphisms(swap_algebra(GF(5))).size() == 2);
  CHECK(brute_force_automorphisms(swap_algebra(GF(7))).size() == 6);
  CHECK(brute_force_automorphisms(swap_algebra(GF(11))).size() == 2);
}

TEST_CASE("oracle output is sorted, duplicate free, and closed as a group") {
  for (const auto& x : {swap_algebra(GF(7)), constant_algebra(3, 2, 1, GF(5)),
                        alg_gf(7, {{0, 1, 0}, {1, 0, 0}, {1, 0, 1}})}) {
    auto out = brute_force_automorphisms(x);
    CHECK(std::is_sorted(out.begin(), out.end()));
    CHECK(std::adjacent_find(out.begin(), out.end()) == out.end());
    for (const auto& a : out) {
      CHECK(std::binary_search(out.begin(), out.end(), inverse(a)));
      for (const auto& b : out) {
        CHECK(std::binary_search(out.begin(), out.end(), compose(a, b)));
      }
    }
  }
}

TEST_CASE("search matches the oracle on every prime-field fixture in range") {
  for (const auto& path : evotest::fixture_files("algebras")) {
    auto j = load_json_file(path);
    auto x = algebra_from_json(j);
    if (x.field.kind != FieldKind::PrimeField) continue;
    if (x.dim > OracleCaps{}.max_dim || x.field.modulus > OracleCaps{}.max_modulus)
      continue;
    CAPTURE(path);
    CHECK(cross_check(x));
  }
}

TEST_CASE("search matches the oracle on seeded random regular algebras") {
  std::mt19937_64 rng(20260825);
  for (int iter = 0; iter < 120; ++iter) {
    int dim = 2 + static_cast<int>(rng() % 3);
    uint64_t p = (rng() % 2 == 0) ? 5 : 7;
    auto x = evotest::random_regular_algebra(rng, dim, p);
    CAPTURE(iter);
    CHECK(cross_check(x));
  }
}

TEST_CASE("oracle enforces its caps and input contract") {
  CHECK_THROWS_AS(brute_force_automorphisms(identity_algebra(6, GF(3))),
                  CapExceeded);
  CHECK_THROWS_AS(brute_force_automorphisms(swap_algebra(GF(13))), CapExceeded);
  CHECK_THROWS_AS(brute_force_automorphisms(swap_algebra(Q())), DomainError);
  CHECK_THROWS_AS(
      brute_force_automorphisms(alg_gf(5, {{1, 2}, {2, 4}})), DomainError);
  CHECK(brute_force_automorphisms(swap_algebra(GF(13)), OracleCaps{5, 13})
            .size() == 6);
}
