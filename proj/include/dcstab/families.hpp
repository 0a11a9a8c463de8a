#pragma once

#include <cstddef>
#include <vector>

#include "dcstab/double_cover.hpp"
#include "dcstab/graph.hpp"
#include "dcstab/permutation.hpp"

namespace dcstab {

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Requires n >= 3.
Graph cycle(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5.
Graph petersen();
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

/// J(n,k): k-subsets of {0..n-1} in colexicographic order, adjacent when
/// they share k-1 elements. Requires n >= k >= 1 and n <= 64.
Graph johnson(std::size_t n, std::size_t k);
/// Vertex i of johnson(n,k) as a bitmask over {0..n-1}.
std::vector<std::uint64_t> johnson_subsets(std::size_t n, std::size_t k);

/// Lexicographic product: (u1,v1) ~ (u2,v2) iff u1 ~ u2, or u1 = u2 and
/// v1 ~ v2. Vertex (u,v) is u*|V(h)| + v.
Graph lex_product(const Graph& g, const Graph& h);

/// C_m wr H for m >= 8 and H non-trivial, vertex-transitive, twin-free and
/// bipartite. Violated hypotheses are all reported in a HypothesisError.
Graph lms_counterexample(std::size_t m, const Graph& h);

/// X(A,B): four new vertices a1 = n, a2 = n+1, b1 = n+2, b2 = n+3, edges
/// a1b1 and a2b2, a1 and a2 joined to A, b1 and b2 joined to B.
struct XabExtension {
  Graph base;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  Graph result;

  Vertex a1() const noexcept { return static_cast<Vertex>(base.order()); }
  Vertex a2() const noexcept { return static_cast<Vertex>(base.order() + 1); }
  Vertex b1() const noexcept { return static_cast<Vertex>(base.order() + 2); }
  Vertex b2() const noexcept { return static_cast<Vertex>(base.order() + 3); }
};

XabExtension extend_xab(const Graph& x, std::vector<Vertex> a, std::vector<Vertex> b);

/// ((a1,0),(a2,0))((b1,1),(b2,1)) on the vertex set of B(X(A,B)).
Permutation gamma_star(const XabExtension& e);

}  // namespace dcstab
