#include <doctest.h>

#include <random>

#include "dcstab/canon.hpp"
#include "dcstab/errors.hpp"
#include "dcstab/families.hpp"
#include "dcstab/perm_group.hpp"
#include "support/oracles.hpp"

using namespace dcstab;

namespace {

Permutation cyc(std::size_t n, std::vector<Point> c) { return Permutation::from_cycles(n, {std::move(c)}); }

Permutation random_word(const std::vector<Permutation>& gens, std::mt19937_64& rng) {
  Permutation w = identity(gens.front().degree());
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int i = 0; i < 20; ++i) w = compose(w, rng() % 3 ? gens[pick(rng)] : inverse(gens[pick(rng)]));
  return w;
}

}  // namespace

TEST_CASE("permutation basics") {
  CHECK(compose(cyc(2, {0, 1}), cyc(2, {0, 1})) == identity(2));
  CHECK(inverse(cyc(3, {0, 1, 2})) == cyc(3, {0, 2, 1}));
  Permutation p = cyc(5, {0, 3, 4});
  CHECK(compose(p, identity(5)) == p);
  CHECK(compose(p, inverse(p)).is_identity());
  CHECK(p.first_moved_point() == 0);
  CHECK(identity(4).first_moved_point() == 4);
  CHECK(p.to_string() == "[3,1,2,4,0]");
  CHECK(p.to_cycle_string() == "(0 3 4)");
  CHECK(identity(3).to_cycle_string() == "()");
  CHECK_THROWS_AS(compose(identity(2), identity(3)), ContractViolation);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), ContractViolation);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3}), ContractViolation);
}

TEST_CASE("compose applies the left argument first") {
  Permutation a = cyc(3, {0, 1}), b = cyc(3, {1, 2});
  Permutation ab = compose(a, b);
  for (Point x = 0; x < 3; ++x) CHECK(ab[x] == b[a[x]]);
}

TEST_CASE("small groups") {
  PermGroup s4(4, {cyc(4, {0, 1}), cyc(4, {0, 1, 2, 3})});
  CHECK(s4.order() == 24);
  CHECK(s4.orbit(0) == std::vector<Point>{0, 1, 2, 3});
  CHECK(s4.is_transitive());
  CHECK(s4.contains(Permutation(std::vector<Point>{2, 0, 3, 1})));

  PermGroup trivial(5, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.is_trivial());
  CHECK(trivial.orbit(3) == std::vector<Point>{3});
  CHECK(PermGroup(5).orbits().size() == 5);

  PermGroup c5(5, {cyc(5, {0, 1, 2, 3, 4})});
  CHECK(c5.order() == 5);
  CHECK_FALSE(c5.contains(cyc(5, {0, 1})));

  PermGroup d5(5, {cyc(5, {0, 1, 2, 3, 4}), Permutation(std::vector<Point>{0, 4, 3, 2, 1})});
  CHECK(d5.order() == 10);

  CHECK_THROWS_AS(PermGroup(4, {identity(3)}), ContractViolation);
}

TEST_CASE("Petersen automorphism group has order 120") {
  Graph p = petersen();
  PermGroup aut = automorphism_group(p);
  CHECK(aut.order() == 120);
  CHECK(oracle::count_automorphisms(p) == 120);
  CHECK(aut.is_transitive());
}

TEST_CASE("group order matches naive closure") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + trial % 8;
    std::size_t k = rng() % 3;
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < k; ++i) {
      // Keep a mix of small and large groups: sometimes a random transposition.
      if (rng() % 2 && n >= 2) {
        Point a = rng() % n, b = rng() % n;
        gens.push_back(a == b ? identity(n) : cyc(n, {a, b}));
      } else {
        gens.push_back(oracle::random_permutation(n, rng));
      }
    }
    PermGroup g(n, gens);
    auto elements = oracle::closure(n, gens);
    REQUIRE(g.order() == elements.size());

    BigInt prod = 1;
    for (auto s : g.basic_orbit_sizes()) prod *= s;
    CHECK(prod == g.order());
    BigInt fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    CHECK(fact % g.order() == 0);

    std::size_t covered = 0;
    for (const auto& o : g.orbits()) covered += o.size();
    CHECK(covered == n);

    // Every strong generator fixes the base prefix of its level.
    auto base = g.base();
    for (const auto& s : g.strong_generators()) {
      std::size_t fixed = 0;
      while (fixed < base.size() && s[base[fixed]] == base[fixed]) ++fixed;
      CHECK(fixed < base.size());
    }

    if (!gens.empty()) {
      for (int w = 0; w < 10; ++w) CHECK(g.contains(random_word(gens, rng)));
    }
    for (int w = 0; w < 10; ++w) {
      Permutation p = oracle::random_permutation(n, rng);
      std::vector<Point> img(p.images().begin(), p.images().end());
      CHECK(g.contains(p) == (elements.count(img) == 1));
    }
  }
}

TEST_CASE("large orders stay exact") {
  // S_30 x S_30 acting on 60 points; order (30!)^2 overflows 64 bits.
  std::vector<Permutation> gens{cyc(60, {0, 1})};
  std::vector<Point> long_cycle(30), other(30);
  for (Point i = 0; i < 30; ++i) long_cycle[i] = i, other[i] = i + 30;
  gens.push_back(cyc(60, long_cycle));
  gens.push_back(cyc(60, {30, 31}));
  gens.push_back(cyc(60, other));
  BigInt f = 1;
  for (int i = 2; i <= 30; ++i) f *= i;
  CHECK(PermGroup(60, gens).order() == f * f);
}
