#include <doctest.h>

#include <random>

#include "dcstab/canon.hpp"
#include "dcstab/census.hpp"
#include "dcstab/families.hpp"
#include "dcstab/graph6.hpp"
#include "support/oracles.hpp"

using namespace dcstab;

namespace {

bool is_equitable(const Graph& g, const OrderedPartition& p) {
  for (const auto& cell : p.cells)
    for (const auto& target : p.cells) {
      std::size_t first = 0;
      for (std::size_t i = 0; i < cell.size(); ++i) {
        std::size_t c = 0;
        for (Vertex t : target) c += g.adjacent(cell[i], t);
        if (i == 0) first = c;
        if (c != first) return false;
      }
    }
  return true;
}

OrderedPartition individualize(std::size_t n, Vertex v) {
  OrderedPartition p;
  p.cells.push_back({v});
  p.cells.emplace_back();
  for (Vertex u = 0; u < n; ++u)
    if (u != v) p.cells.back().push_back(u);
  return p;
}

}  // namespace

TEST_CASE("refinement examples") {
  CHECK(refine(complete_graph(4), OrderedPartition::unit(4)) == OrderedPartition::unit(4));

  auto p3 = refine(path_graph(3), OrderedPartition::unit(3));
  REQUIRE(p3.cells.size() == 2);
  CHECK(p3.cells[0] == std::vector<Vertex>{0, 2});
  CHECK(p3.cells[1] == std::vector<Vertex>{1});

  auto c5 = refine(cycle(5), individualize(5, 0));
  CHECK_FALSE(c5.is_discrete());
  REQUIRE(c5.cells.size() == 3);
  CHECK(c5.cells[0] == std::vector<Vertex>{0});
  std::vector<std::vector<Vertex>> rest{c5.cells[1], c5.cells[2]};
  std::sort(rest.begin(), rest.end());
  CHECK(rest == std::vector<std::vector<Vertex>>{{1, 4}, {2, 3}});
}

TEST_CASE("refinement output is equitable and finer than its input") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 2 + trial % 12;
    Graph g = oracle::random_graph(n, 0.4, rng);
    auto start = individualize(n, static_cast<Vertex>(rng() % n));
    auto r = refine(g, start);
    r.validate(n);
    CHECK(is_equitable(g, r));
    CHECK(r.cells.front() == start.cells.front());
  }
}

TEST_CASE("automorphism group examples") {
  CHECK(automorphism_group(complete_graph(4)).order() == 24);
  CHECK(automorphism_group(cycle(5)).order() == 10);
  CHECK(automorphism_group(petersen()).order() == 120);
  CHECK(automorphism_group(empty_graph(0)).order() == 1);
  CHECK(automorphism_group(empty_graph(6)).order() == 720);
}

TEST_CASE("automorphism group order matches brute force") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      auto form = canonical_form(g);
      PermGroup aut(n, form.aut_generators);
      REQUIRE(aut.order() == oracle::count_automorphisms(g));
      CHECK(form.search_group_order == aut.order());
      for (const auto& gen : form.aut_generators) CHECK(is_automorphism(g, gen));
    }
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(8, 0.2 + 0.1 * (trial % 7), rng);
    REQUIRE(automorphism_group(g).order() == oracle::count_automorphisms(g));
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    Graph g = oracle::random_graph(8, 0.5, rng);
    auto a = canonical_form(g);
    CHECK(permute(g, a.relabeling) == a.canonical_graph);
    CHECK(write_graph6(a.canonical_graph) == a.canonical_graph6);
    Graph h = permute(g, oracle::random_permutation(8, rng));
    REQUIRE(canonical_form(h).canonical_graph6 == a.canonical_graph6);
  }
}

TEST_CASE("canonical form on symmetric graphs with many relabelings") {
  std::vector<Graph> corpus{petersen(), johnson(6, 3), lex_product(cycle(4), cycle(4)), complete_bipartite(3, 4),
                            disjoint_union(cycle(5), cycle(5)), johnson(7, 2)};
  std::mt19937_64 rng(3);
  for (const Graph& g : corpus) {
    auto a = canonical_form(g);
    for (int i = 0; i < 50; ++i)
      CHECK(canonical_form(permute(g, oracle::random_permutation(g.order(), rng))).canonical_graph6 ==
            a.canonical_graph6);
  }
}

TEST_CASE("orbit-stabilizer") {
  std::vector<Graph> corpus{petersen(), johnson(6, 2), cycle(9), lex_product(cycle(5), empty_graph(2)),
                            complete_bipartite(2, 5)};
  for (const Graph& g : corpus) {
    auto aut = automorphism_group(g);
    auto orbit = aut.orbit(0);
    // Stabilizer of 0: colour 0 on its own.
    OrderedPartition colouring = individualize(g.order(), 0);
    auto stab = automorphism_group(g, colouring);
    CHECK(stab.orbit(0) == std::vector<Point>{0});
    CHECK(BigInt(orbit.size()) * stab.order() == aut.order());
  }
}

TEST_CASE("isomorphism") {
  CHECK(are_isomorphic(johnson(6, 2), johnson(6, 4)));
  CHECK(are_isomorphic(johnson(5, 2), complement(petersen())));
  CHECK_FALSE(are_isomorphic(complete_graph(4), cycle(4)));
  CHECK_FALSE(are_isomorphic(complete_graph(3), path_graph(3)));
  CHECK(canonical_form(cycle(6)).canonical_graph6 !=
        canonical_form(disjoint_union(complete_graph(3), complete_graph(3))).canonical_graph6);
  CHECK_FALSE(are_isomorphic(complete_graph(3), complete_graph(4)));
}

TEST_CASE("isomorphism agrees with brute-force certificates") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_graph(6, 0.5, rng), h = oracle::random_graph(6, 0.5, rng);
    CHECK(are_isomorphic(g, h) == (oracle::brute_certificate(g) == oracle::brute_certificate(h)));
  }
}

TEST_CASE("colourings restrict automorphisms") {
  OrderedPartition p;
  p.cells = {{0, 1, 2}, {3, 4, 5}};
  auto g = cycle(6);
  auto aut = automorphism_group(g, p);
  for (const auto& gen : aut.generators())
    for (Vertex v = 0; v < 6; ++v) CHECK((gen[v] < 3) == (v < 3));
  CHECK(aut.order() == 2);
}

TEST_CASE("automorphism orders of larger families") {
  auto fact = [](std::size_t n) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
  };
  auto pow = [](BigInt b, std::size_t e) {
    BigInt r = 1;
    while (e--) r *= b;
    return r;
  };
  CHECK(automorphism_group(johnson(8, 3)).order() == fact(8));
  CHECK(automorphism_group(johnson(8, 4)).order() == 2 * fact(8));
  CHECK(automorphism_group(complete_bipartite(4, 6)).order() == fact(4) * fact(6));
  CHECK(automorphism_group(complete_bipartite(5, 5)).order() == 2 * fact(5) * fact(5));
  CHECK(automorphism_group(cycle(40)).order() == 80);
  // C_m[H] for twin-free H: Aut(H) wr D_m.
  CHECK(automorphism_group(lex_product(cycle(7), cycle(5))).order() == pow(10, 7) * 14);
  CHECK(automorphism_group(lex_product(cycle(8), petersen())).order() == pow(120, 8) * 16);
  CHECK(automorphism_group(disjoint_union(petersen(), petersen())).order() == 2 * 120 * 120);
  CHECK(automorphism_group(empty_graph(20)).order() == fact(20));
  CHECK(automorphism_group(complement(disjoint_union(cycle(5), cycle(5)))).order() == 200);
}

TEST_CASE("search order and Schreier-Sims agree on random graphs") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 10 + trial % 30;
    // Sparse and dense mixes give both rigid graphs and large groups.
    Graph g = oracle::random_graph(n, trial % 2 ? 0.08 : 0.5, rng);
    auto form = canonical_form(g);
    CHECK(form.search_group_order == PermGroup(n, form.aut_generators).order());
    for (const auto& gen : form.aut_generators) CHECK(is_automorphism(g, gen));
    Graph h = permute(g, oracle::random_permutation(n, rng));
    CHECK(canonical_form(h).canonical_graph6 == form.canonical_graph6);
  }
}
