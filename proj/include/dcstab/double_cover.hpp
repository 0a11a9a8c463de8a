#pragma once

#include <cstddef>

#include "dcstab/graph.hpp"
#include "dcstab/perm_group.hpp"
#include "dcstab/permutation.hpp"

namespace dcstab {

/// The canonical double cover BX = X x K2. Cover vertex (x, i) is encoded
/// as x + i*n, where n is the order of the base graph.
struct DoubleCover {
  Graph base;
  Graph cover;

  std::size_t base_order() const noexcept { return base.order(); }
  Vertex vertex(Vertex x, unsigned layer) const noexcept {
    return x + static_cast<Vertex>(layer * base.order());
  }
  Vertex fiber_of(Vertex v) const noexcept { return static_cast<Vertex>(v % base.order()); }
  unsigned layer_of(Vertex v) const noexcept { return v >= base.order() ? 1u : 0u; }
};

DoubleCover double_cover(const Graph& g);

/// (x, i) -> (phi(x), i). Throws ContractViolation unless phi is an
/// automorphism of the base graph.
Permutation lift(const DoubleCover& d, const Permutation& phi);

/// The layer swap (x, i) -> (x, i + 1 mod 2).
Permutation tau(const DoubleCover& d);

/// Group generated by tau and the lifts of Aut(X) generators.
PermGroup expected_subgroup(const DoubleCover& d);
PermGroup expected_subgroup(const DoubleCover& d, const PermGroup& base_automorphisms);

/// True iff alpha maps every fibre {(x,0),(x,1)} onto a fibre.
bool is_fiber_preserving(const DoubleCover& d, const Permutation& alpha);

/// Whether a cover automorphism is expected. For a connected non-bipartite
/// base this is the fibre test; otherwise membership in expected_subgroup.
/// Throws ContractViolation unless alpha is an automorphism of the cover.
bool is_expected(const DoubleCover& d, const Permutation& alpha);

}  // namespace dcstab
