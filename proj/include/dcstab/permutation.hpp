#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dcstab {

using Point = std::uint32_t;

/// Bijection of {0..degree-1}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  /// Throws ContractViolation unless images is a bijection of {0..size-1}.
  explicit Permutation(std::vector<Point> images);

  /// Skips the bijection check; the caller guarantees images is valid.
  static Permutation unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }
  static Permutation identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles; unlisted points are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Smallest moved point, or degree() for the identity.
  Point first_moved_point() const noexcept;

  /// One-line image list, e.g. "[1,0,2]".
  std::string to_string() const;
  /// Disjoint cycles without fixed points, e.g. "(0 1)(2 3 4)"; "()" for identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Left-to-right product: compose(p, q) applies p first, then q.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation inverse(const Permutation& p) { return p.inverse(); }
inline Permutation identity(std::size_t degree) { return Permutation::identity(degree); }

}  // namespace dcstab
