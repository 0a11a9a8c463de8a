#include "dcstab/families.hpp"

#include <algorithm>
#include <bit>

#include "dcstab/canon.hpp"
#include "dcstab/errors.hpp"

namespace dcstab {

Graph empty_graph(std::size_t n) { return GraphBuilder(n).set_label("E" + std::to_string(n)).build(); }

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  b.set_label("K" + std::to_string(n));
  return std::move(b).build();
}

Graph cycle(std::size_t n) {
  if (n < 3) throw ContractViolation("cycle: requires n >= 3");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  b.set_label("C" + std::to_string(n));
  return std::move(b).build();
}

Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  b.set_label("P" + std::to_string(n));
  return std::move(b).build();
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  GraphBuilder gb(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) gb.add_edge(u, static_cast<Vertex>(a + v));
  gb.set_label("K" + std::to_string(a) + "," + std::to_string(b));
  return std::move(gb).build();
}

Graph petersen() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  b.set_label("Petersen");
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const auto n = static_cast<Vertex>(g.order());
  GraphBuilder b(g.order() + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + n, v + n);
  return std::move(b).build();
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

std::vector<std::uint64_t> johnson_subsets(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw ContractViolation("johnson: requires n >= k >= 1");
  if (n > 64) throw ContractViolation("johnson: requires n <= 64");
  std::vector<std::uint64_t> subsets;
  std::uint64_t s = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit_bit = n == 64 ? 0 : std::uint64_t{1} << n;
  // Gosper's hack enumerates fixed-popcount masks in increasing order, which
  // is colex order on the subsets.
  while (true) {
    subsets.push_back(s);
    std::uint64_t c = s & (~s + 1);
    std::uint64_t r = s + c;
    if (r == 0 && n == 64) break;
    std::uint64_t next = (((r ^ s) >> 2) / c) | r;
    if (limit_bit && next >= limit_bit) break;
    if (next <= s) break;
    s = next;
  }
  return subsets;
}

Graph johnson(std::size_t n, std::size_t k) {
  const auto subsets = johnson_subsets(n, k);
  GraphBuilder b(subsets.size());
  for (Vertex i = 0; i < subsets.size(); ++i)
    for (Vertex j = i + 1; j < subsets.size(); ++j)
      if (static_cast<std::size_t>(std::popcount(subsets[i] & subsets[j])) + 1 == k) b.add_edge(i, j);
  b.set_label("J(" + std::to_string(n) + "," + std::to_string(k) + ")");
  return std::move(b).build();
}

Graph lex_product(const Graph& g, const Graph& h) {
  const std::size_t m = h.order();
  GraphBuilder b(g.order() * m);
  auto id = [m](Vertex u, Vertex v) { return static_cast<Vertex>(u * m + v); };
  for (Vertex u1 = 0; u1 < g.order(); ++u1) {
    for (Vertex v1 = 0; v1 < m; ++v1) {
      for (Vertex u2 = 0; u2 < g.order(); ++u2) {
        for (Vertex v2 = 0; v2 < m; ++v2) {
          if (id(u1, v1) >= id(u2, v2)) continue;
          if (g.adjacent(u1, u2) || (u1 == u2 && h.adjacent(v1, v2))) b.add_edge(id(u1, v1), id(u2, v2));
        }
      }
    }
  }
  if (!g.label().empty() && !h.label().empty()) b.set_label(g.label() + " wr " + h.label());
  return std::move(b).build();
}

Graph lms_counterexample(std::size_t m, const Graph& h) {
  std::vector<std::string> failures;
  if (m < 8) failures.push_back("m >= 8");
  if (h.order() < 2) failures.push_back("H non-trivial");
  if (!automorphism_group(h).is_transitive()) failures.push_back("H vertex-transitive");
  if (!is_twin_free(h)) failures.push_back("H twin-free");
  if (!is_bipartite(h)) failures.push_back("H bipartite");
  if (!failures.empty()) throw HypothesisError(std::move(failures));
  return lex_product(cycle(m), h);
}

XabExtension extend_xab(const Graph& x, std::vector<Vertex> a, std::vector<Vertex> b) {
  for (auto* set : {&a, &b}) {
    std::sort(set->begin(), set->end());
    set->erase(std::unique(set->begin(), set->end()), set->end());
    if (!set->empty() && set->back() >= x.order()) throw ContractViolation("extend_xab: vertex out of range");
  }
  XabExtension e{x, std::move(a), std::move(b), {}};
  GraphBuilder gb(x.order() + 4);
  for (auto [u, v] : x.edges()) gb.add_edge(u, v);
  gb.add_edge(e.a1(), e.b1());
  gb.add_edge(e.a2(), e.b2());
  for (Vertex v : e.a) {
    gb.add_edge(e.a1(), v);
    gb.add_edge(e.a2(), v);
  }
  for (Vertex v : e.b) {
    gb.add_edge(e.b1(), v);
    gb.add_edge(e.b2(), v);
  }
  e.result = std::move(gb).build();
  return e;
}

Permutation gamma_star(const XabExtension& e) {
  const auto n = static_cast<Point>(e.result.order());
  return Permutation::from_cycles(2 * n, {{e.a1(), e.a2()}, {e.b1() + n, e.b2() + n}});
}

}  // namespace dcstab
