#include <doctest.h>
#include <evokit/autgroup.hpp>
#include <evokit/errors.hpp>
#include <evokit/fixtures.hpp>
#include <evokit/oracle.hpp>

#include <cstdlib>
#include <random>
#include <vector>

#include "helpers.hpp"

using namespace evokit;
using evotest::alg;
using evotest::alg_gf;
using evotest::GF;
using evotest::Q;
using evotest::qs;

namespace {

std::vector<std::string> strings(const std::vector<Scalar>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

std::vector<Scalar> gf_weights(uint64_t p, const std::vector<long>& vals) {
  std::vector<Scalar> out;
  for (long v : vals) out.push_back(Scalar::from_int(v, GF(p)));
  return out;
}

// Every permutation of {0..n-1}, used to sweep sigma exhaustively.
std::vector<Perm> all_perms(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::vector<Perm> out;
  do {
    out.push_back(Perm(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

TEST_CASE("defining condition: frozen accept and reject cases") {
  auto id3 = identity_algebra(3, Q());
  std::vector<Scalar> ones(3, qs("1"));
  for (const auto& sigma : all_perms(3)) {
    CHECK(check_automorphism(id3, sigma, ones));
  }
  CHECK_FALSE(check_automorphism(id3, Perm::identity(3),
                                 {qs("2"), qs("1"), qs("1")}));

  auto swap7 = swap_algebra(GF(7));
  Perm flip = Perm::from_cycles(2, {{1, 2}});
  CHECK(check_automorphism(swap7, flip, gf_weights(7, {2, 4})));
  CHECK(check_automorphism(swap7, Perm::identity(2), gf_weights(7, {4, 2})));
  CHECK_FALSE(check_automorphism(swap7, flip, gf_weights(7, {2, 3})));
  CHECK_FALSE(check_automorphism(swap7, flip, gf_weights(7, {0, 1})));

  auto swapq = swap_algebra(Q());
  CHECK(check_automorphism(swapq, flip, {qs("1"), qs("1")}));
  CHECK_FALSE(check_automorphism(swapq, Perm::identity(2), {qs("2"), qs("4")}));

  CHECK_THROWS_AS(check_automorphism(swapq, Perm::identity(3), {qs("1"), qs("1")}),
                  DomainError);
  CHECK_THROWS_AS(check_automorphism(swapq, flip, {qs("1")}), DomainError);
}

TEST_CASE("composition and inversion stay inside the automorphism group") {
  auto x = swap_algebra(GF(7));
  auto aut = automorphism_group(x);
  REQUIRE(aut.elements.size() == 6);
  for (const auto& a : aut.elements) {
    for (const auto& b : aut.elements) {
      auto c = compose(a, b);
      CHECK(check_automorphism(x, c.sigma, c.lambda));
      CHECK(std::binary_search(aut.elements.begin(), aut.elements.end(), c));
    }
    auto inv = inverse(a);
    CHECK(check_automorphism(x, inv.sigma, inv.lambda));
    auto unit = compose(inv, a);
    CHECK(unit.sigma.is_identity());
    for (const auto& l : unit.lambda) CHECK(l.is_one());
  }
}

TEST_CASE("composition applies the right factor first on weights") {
  WeightedAutomorphism a{Perm::from_cycles(2, {{1, 2}}), gf_weights(7, {2, 4})};
  WeightedAutomorphism b{Perm::identity(2), gf_weights(7, {4, 2})};
  auto c = compose(a, b);
  CHECK(c.sigma == a.sigma);
  // lambda_i = lambda_b[i] * lambda_a[sigma_b(i)]
  CHECK(strings(c.lambda) == std::vector<std::string>{"1", "1"});
  auto d = compose(b, a);
  CHECK(strings(d.lambda) == std::vector<std::string>{"4", "2"});
}

TEST_CASE("closed form from nonzero diagonal entries") {
  auto x = alg(Q(), {{"2", "0"}, {"0", "3"}});
  Perm flip = Perm::from_cycles(2, {{1, 2}});
  auto lam = lambda_from_diagonal(x, flip);
  CHECK(strings(lam) == std::vector<std::string>{"2/3", "3/2"});
  CHECK(check_automorphism(x, flip, lam));
  CHECK(strings(lambda_from_diagonal(x, Perm::identity(2))) ==
        std::vector<std::string>{"1", "1"});

  auto swap = swap_algebra(Q());
  CHECK_THROWS_AS(lambda_from_diagonal(swap, flip), DomainError);
}

TEST_CASE("closed form from off-diagonal triples") {
  auto x = constant_algebra(4, 2, 1, Q());
  for (const auto& sigma : all_perms(4)) {
    CHECK(lambda_B(x, sigma, 0, 1, 2).is_one());
    CHECK(lambda_B(x, sigma, 3, 1, 0).is_one());
  }
  CHECK_THROWS_AS(lambda_B(x, Perm::identity(4), 0, 0, 2), DomainError);
  CHECK_THROWS_AS(lambda_B(swap_algebra(Q()), Perm::identity(2), 0, 1, 1),
                  DomainError);
  auto sparse = alg(Q(), {{"1", "0", "1"}, {"0", "1", "1"}, {"0", "0", "1"}});
  CHECK_THROWS_AS(lambda_B(sparse, Perm::identity(3), 0, 1, 2), DomainError);
}

TEST_CASE("off-diagonal closed form matches every found automorphism") {
  std::mt19937_64 rng(29);
  int tested = 0;
  for (int iter = 0; iter < 60 && tested < 8; ++iter) {
    FieldSpec f = GF(7);
    std::vector<std::vector<Scalar>> m(4);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        uint64_t r = i == j ? rng() % 7 : 1 + rng() % 6;
        m[i].push_back(Scalar::residue(r, f));
      }
    }
    auto x = EvolutionAlgebra::create(f, std::move(m));
    if (!x.idempotent) continue;
    ++tested;
    for (const auto& a : automorphism_group(x).elements) {
      for (int i = 0; i < 4; ++i) {
        int j = i == 0 ? 1 : 0;
        int k = (i == 2 || j == 2) ? 3 : 2;
        CHECK(a.lambda[i] == lambda_B(x, a.sigma, i, j, k));
      }
    }
  }
  CHECK(tested > 0);
}

TEST_CASE("weight solving: frozen cases over GF(7) and Q") {
  auto swap7 = swap_algebra(GF(7));
  auto sols = solve_lambda(swap7, Perm::identity(2));
  REQUIRE(sols.size() == 3);
  CHECK(strings(sols[0]) == std::vector<std::string>{"1", "1"});
  CHECK(strings(sols[1]) == std::vector<std::string>{"2", "4"});
  CHECK(strings(sols[2]) == std::vector<std::string>{"4", "2"});
  CHECK(solve_lambda(swap7, Perm::from_cycles(2, {{1, 2}})).size() == 3);

  auto swapq = swap_algebra(Q());
  auto qsols = solve_lambda(swapq, Perm::identity(2));
  REQUIRE(qsols.size() == 1);
  CHECK(strings(qsols[0]) == std::vector<std::string>{"1", "1"});

  auto id3 = identity_algebra(3, GF(5));
  for (const auto& sigma : all_perms(3)) {
    auto s = solve_lambda(id3, sigma);
    REQUIRE(s.size() == 1);
    CHECK(strings(s[0]) == std::vector<std::string>{"1", "1", "1"});
  }
}

TEST_CASE("weight solving returns nothing when the zero pattern breaks") {
  auto x = alg(Q(), {{"1", "0", "1"}, {"0", "1", "1"}, {"0", "0", "1"}});
  CHECK(solve_lambda(x, Perm::from_cycles(3, {{1, 3}})).empty());
  CHECK(solve_lambda_by_propagation(x, Perm::from_cycles(3, {{1, 3}})).empty());
  CHECK_FALSE(solve_lambda(x, Perm::from_cycles(3, {{1, 2}})).empty());
}

TEST_CASE("propagation engine agrees with the closed-form shortcuts") {
  std::vector<EvolutionAlgebra> corpus{
      identity_algebra(3, Q()),        identity_algebra(4, GF(5)),
      constant_algebra(3, 2, 1, Q()),  constant_algebra(4, 2, 1, GF(7)),
      constant_algebra(3, 0, 1, Q()),  swap_algebra(GF(7)),
      alg(Q(), {{"2", "0"}, {"0", "3"}}),
      alg_gf(7, {{0, 1, 0}, {1, 0, 0}, {1, 0, 1}}),
      alg(Q(), {{"1", "0", "1"}, {"0", "1", "1"}, {"0", "0", "1"}}),
  };
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 25; ++iter) {
    corpus.push_back(evotest::random_regular_algebra(rng, 3, 5));
    corpus.push_back(evotest::random_regular_algebra(rng, 4, 7));
  }
  for (const auto& x : corpus) {
    for (const auto& sigma : all_perms(x.dim)) {
      auto fast = solve_lambda(x, sigma);
      auto slow = solve_lambda_by_propagation(x, sigma);
      CHECK(fast == slow);
      for (const auto& lam : fast) CHECK(check_automorphism(x, sigma, lam));
    }
  }
}

TEST_CASE("propagation rejects inputs that leave a weight unconstrained") {
  auto x = alg(Q(), {{"0", "1"}, {"0", "0"}});
  CHECK_FALSE(x.idempotent);
  CHECK_THROWS_AS(solve_lambda_by_propagation(x, Perm::identity(2)),
                  InternalError);
}

TEST_CASE("automorphism group: frozen orders and flags") {
  struct Row {
    EvolutionAlgebra x;
    std::uint64_t order, kernel, image;
    bool faithful, full;
  };
  std::vector<Row> rows;
  rows.push_back({identity_algebra(3, Q()), 6, 1, 6, true, true});
  rows.push_back({identity_algebra(4, GF(5)), 24, 1, 24, true, true});
  rows.push_back({swap_algebra(GF(7)), 6, 3, 2, false, true});
  rows.push_back({swap_algebra(Q()), 2, 1, 2, true, true});
  rows.push_back({swap_algebra(GF(5)), 2, 1, 2, true, true});
  rows.push_back({swap_algebra(GF(11)), 2, 1, 2, true, true});
  rows.push_back({swap_algebra(GF(13)), 6, 3, 2, false, true});
  rows.push_back({constant_algebra(4, 2, 1, GF(7)), 24, 1, 24, true, true});
  rows.push_back({alg(Q(), {{"1", "0", "1"}, {"0", "1", "1"}, {"0", "0", "1"}}),
                  2, 1, 2, true, false});
  rows.push_back({alg_gf(7, {{0, 1, 0}, {1, 0, 0}, {1, 0, 1}}), 1, 1, 1, true,
                  false});
  rows.push_back({alg(Q(), {{"2", "0"}, {"0", "3"}}), 2, 1, 2, true, true});
  for (const auto& row : rows) {
    auto aut = automorphism_group(row.x);
    CHECK(aut.elements.size() == row.order);
    CHECK(aut.kernel.size() == row.kernel);
    CHECK(aut.image.order() == row.image);
    CHECK(aut.faithful == row.faithful);
    CHECK(aut.full == row.full);
    CHECK(std::is_sorted(aut.elements.begin(), aut.elements.end()));
    CHECK(std::adjacent_find(aut.elements.begin(), aut.elements.end()) ==
          aut.elements.end());
  }
}

TEST_CASE("kernel elements equal the identity-part of the full search") {
  std::mt19937_64 rng(37);
  std::vector<EvolutionAlgebra> corpus{swap_algebra(GF(7)),
                                       constant_algebra(3, 2, 1, GF(5)),
                                       identity_algebra(4, Q())};
  for (int iter = 0; iter < 20; ++iter) {
    corpus.push_back(evotest::random_regular_algebra(rng, 4, 7));
  }
  for (const auto& x : corpus) {
    auto direct = kernel_elements(x);
    auto aut = automorphism_group(x);
    CHECK(direct == aut.kernel);
    CHECK(aut.elements.size() == aut.kernel.size() * aut.image.order());
    for (const auto& k : direct) CHECK(k.sigma.is_identity());
  }
}

TEST_CASE("automorphism group is equivariant under basis changes") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 15; ++iter) {
    auto x = evotest::random_regular_algebra(rng, 4, 7);
    auto aut = automorphism_group(x);

    std::vector<Scalar> lam;
    for (int i = 0; i < 4; ++i)
      lam.push_back(Scalar::residue(1 + rng() % 6, GF(7)));
    CHECK(automorphism_group(rescale_basis(x, lam)).elements.size() ==
          aut.elements.size());

    std::vector<int> img{0, 1, 2, 3};
    std::shuffle(img.begin(), img.end(), rng);
    Perm tau(img);
    auto aut_p = automorphism_group(permute_basis(x, tau));
    CHECK(aut_p.elements.size() == aut.elements.size());
    // The permuted algebra's image is the conjugate of the original's.
    for (const auto& a : aut.elements) {
      CHECK(aut_p.image.contains(tau * a.sigma * tau.inverse()));
    }
  }
}

TEST_CASE("requested thread counts do not change the result") {
  auto x = constant_algebra(5, 2, 1, Q());
  auto serial = automorphism_group(x, AutOptions{1, 16});
  auto parallel = automorphism_group(x, AutOptions{4, 16});
  CHECK(serial.elements == parallel.elements);
  CHECK(serial.image.order() == 120);

  std::mt19937_64 rng(43);
  auto y = evotest::random_regular_algebra(rng, 5, 7);
  CHECK(automorphism_group(y, AutOptions{1, 16}).elements ==
        automorphism_group(y, AutOptions{4, 16}).elements);
}

TEST_CASE("environment thread cap is honored for thread resolution") {
  auto x = swap_algebra(GF(7));
  setenv("EVOKIT_THREADS", "3", 1);
  auto a = automorphism_group(x);
  unsetenv("EVOKIT_THREADS");
  auto b = automorphism_group(x);
  CHECK(a.elements == b.elements);
}

TEST_CASE("dimension cap and idempotence are enforced") {
  CHECK_THROWS_AS(automorphism_group(identity_algebra(4, Q()), AutOptions{1, 3}),
                  CapExceeded);
  CHECK_THROWS_AS(automorphism_group(alg(Q(), {{"1", "2"}, {"2", "4"}})),
                  DomainError);
  CHECK_THROWS_AS(kernel_elements(alg(Q(), {{"1", "1"}, {"0", "0"}})),
                  DomainError);
}

TEST_CASE("permutation representation and its restriction") {
  auto r = rho(identity_algebra(5, Q()));
  CHECK(r.image.order() == 120);
  CHECK(r.faithful);

  CHECK(rho_tilde(identity_algebra(3, Q())).order() == 6);
  CHECK(rho_tilde(identity_algebra(3, Q())).degree() == 3);

  auto diag = alg(Q(), {{"2", "0"}, {"0", "3"}});
  auto rt = rho_tilde(diag);
  CHECK(rt.degree() == 2);
  CHECK(rt.order() == 2);

  auto swap7 = rho_tilde(swap_algebra(GF(7)));
  CHECK(swap7.degree() == 0);
  CHECK(swap7.order() == 1);
}

TEST_CASE("restricted representation matches the graph action on cycles") {
  auto x = cycle_graph_algebra(5, Q());
  CHECK(x.dim == 10);
  auto rt = rho_tilde(x);
  CHECK(rt.degree() == 5);
  CHECK(rt.order() == 10);
  CHECK(rt.is_k_transitive(1));
  CHECK_FALSE(rt.is_k_transitive(2));
}
