#include "dcstab/double_cover.hpp"

#include "dcstab/canon.hpp"
#include "dcstab/errors.hpp"

namespace dcstab {

DoubleCover double_cover(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  GraphBuilder b(2 * g.order());
  for (auto [x, y] : g.edges()) {
    b.add_edge(x, y + n);
    b.add_edge(y, x + n);
  }
  if (!g.label().empty()) b.set_label("B(" + g.label() + ")");
  return DoubleCover{g, std::move(b).build()};
}

Permutation lift(const DoubleCover& d, const Permutation& phi) {
  if (phi.degree() != d.base_order() || !is_automorphism(d.base, phi))
    throw ContractViolation("lift: not an automorphism of the base graph");
  const std::size_t n = d.base_order();
  std::vector<Point> images(2 * n);
  for (Point x = 0; x < n; ++x) {
    images[x] = phi[x];
    images[x + n] = phi[x] + static_cast<Point>(n);
  }
  return Permutation::unchecked(std::move(images));
}

Permutation tau(const DoubleCover& d) {
  const std::size_t n = d.base_order();
  std::vector<Point> images(2 * n);
  for (Point x = 0; x < n; ++x) {
    images[x] = x + static_cast<Point>(n);
    images[x + n] = x;
  }
  return Permutation::unchecked(std::move(images));
}

PermGroup expected_subgroup(const DoubleCover& d, const PermGroup& base_automorphisms) {
  std::vector<Permutation> gens{tau(d)};
  for (const auto& phi : base_automorphisms.generators()) gens.push_back(lift(d, phi));
  return PermGroup(2 * d.base_order(), std::move(gens));
}

PermGroup expected_subgroup(const DoubleCover& d) { return expected_subgroup(d, automorphism_group(d.base)); }

bool is_fiber_preserving(const DoubleCover& d, const Permutation& alpha) {
  const std::size_t n = d.base_order();
  if (alpha.degree() != 2 * n) return false;
  for (Point x = 0; x < n; ++x)
    if (d.fiber_of(alpha[x]) != d.fiber_of(alpha[x + static_cast<Point>(n)])) return false;
  return true;
}

bool is_expected(const DoubleCover& d, const Permutation& alpha) {
  if (alpha.degree() != d.cover.order() || !is_automorphism(d.cover, alpha))
    throw ContractViolation("is_expected: not an automorphism of the double cover");
  if (is_connected(d.base) && !is_bipartite(d.base)) return is_fiber_preserving(d, alpha);
  return expected_subgroup(d).contains(alpha);
}

}  // namespace dcstab
