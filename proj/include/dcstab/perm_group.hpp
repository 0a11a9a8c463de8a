#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <utility>
#include <vector>

#include "dcstab/permutation.hpp"

namespace dcstab {

using BigInt = boost::multiprecision::cpp_int;

/// Permutation group given by generators, with a base and strong generating
/// set built by deterministic Schreier-Sims. Transversals are kept as
/// Schreier vectors. Immutable after construction.
class PermGroup {
 public:
  /// Trivial group on `degree` points.
  explicit PermGroup(std::size_t degree = 0);
  /// Throws ContractViolation if some generator has the wrong degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& strong_generators() const noexcept { return strong_; }
  std::vector<Point> base() const;
  std::vector<std::size_t> basic_orbit_sizes() const;

  BigInt order() const;
  bool is_trivial() const noexcept { return levels_.empty(); }

  /// Sorted orbit of x under the group.
  std::vector<Point> orbit(Point x) const;
  /// All orbits, each sorted, ordered by smallest element.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  bool contains(const Permutation& p) const;

 private:
  struct Level {
    Point base_point;
    std::vector<std::size_t> gens;  // indices into strong_ / strong_inv_
    // schreier[x] = -2 outside the orbit, -1 at the base point, else the
    // position in `gens` of the generator that reached x.
    std::vector<int> schreier;
    std::vector<Point> orbit;
  };

  void build();
  void rebuild_orbit(Level& level) const;
  Permutation transversal(const Level& level, Point x) const;
  /// Strips g through levels [from, end). Returns the residue and the
  /// index of the level where stripping stopped.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;
  std::size_t add_strong_generator(Permutation g);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<Permutation> strong_inv_;
  std::vector<Level> levels_;
};

}  // namespace dcstab
