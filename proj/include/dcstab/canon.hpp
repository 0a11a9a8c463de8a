#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcstab/graph.hpp"
#include "dcstab/perm_group.hpp"
#include "dcstab/permutation.hpp"

namespace dcstab {

/// Ordered list of disjoint non-empty cells covering every vertex.
struct OrderedPartition {
  std::vector<std::vector<Vertex>> cells;

  static OrderedPartition unit(std::size_t n);
  /// Throws ContractViolation unless the cells partition {0..n-1}.
  void validate(std::size_t n) const;
  bool is_discrete() const noexcept;
  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

/// Coarsest equitable partition finer than p. Cells keep their relative
/// order; a split cell is replaced in place by its fragments, ordered by
/// ascending neighbour count into the splitting cell.
OrderedPartition refine(const Graph& g, const OrderedPartition& p);

struct CanonicalForm {
  /// Maps each input vertex to its canonical position.
  Permutation relabeling;
  Graph canonical_graph;
  std::string canonical_graph6;
  /// Generators of the automorphism group (of the coloured graph when an
  /// initial partition was given).
  std::vector<Permutation> aut_generators;
  /// |Aut| from the orbit sizes along the first path of the search tree.
  /// Independent of Schreier-Sims; used as a cross-check.
  BigInt search_group_order = 1;
  std::size_t nodes_visited = 0;
};

/// Individualization-refinement search. An initial ordered partition acts
/// as a vertex colouring: only colour-preserving maps are automorphisms and
/// the canonical form depends on the colour order.
CanonicalForm canonical_form(const Graph& g, const std::optional<OrderedPartition>& colouring = std::nullopt);

PermGroup automorphism_group(const Graph& g, const std::optional<OrderedPartition>& colouring = std::nullopt);

bool are_isomorphic(const Graph& g, const Graph& h);

/// Applies p as a relabeling: u ~ v in g iff p[u] ~ p[v] in the result.
Graph permute(const Graph& g, const Permutation& p);

bool is_automorphism(const Graph& g, const Permutation& p);

/// Orbits of the group generated by gens, as a representative map
/// (smallest point of each orbit).
std::vector<Point> orbit_representatives(std::size_t degree, const std::vector<Permutation>& gens);

}  // namespace dcstab
