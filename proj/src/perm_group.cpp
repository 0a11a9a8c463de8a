#include "dcstab/perm_group.hpp"

#include <algorithm>
#include <numeric>

#include "dcstab/errors.hpp"

namespace dcstab {

namespace {

// compose() without the degree and bijection checks.
Permutation multiply(const Permutation& p, const Permutation& q) {
  std::vector<Point> images(p.degree());
  for (Point x = 0; x < p.degree(); ++x) images[x] = q[p[x]];
  return Permutation::unchecked(std::move(images));
}

}  // namespace

PermGroup::PermGroup(std::size_t degree) : degree_(degree) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw ContractViolation("PermGroup: generator degree mismatch");
  build();
}

void PermGroup::rebuild_orbit(Level& level) const {
  level.schreier.assign(degree_, -2);
  level.orbit.clear();
  level.schreier[level.base_point] = -1;
  level.orbit.push_back(level.base_point);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    Point x = level.orbit[head];
    for (std::size_t j = 0; j < level.gens.size(); ++j) {
      Point y = strong_[level.gens[j]][x];
      if (level.schreier[y] == -2) {
        level.schreier[y] = static_cast<int>(j);
        level.orbit.push_back(y);
      }
    }
  }
}

Permutation PermGroup::transversal(const Level& level, Point x) const {
  // Collect the generator word from the base point to x, then multiply.
  std::vector<std::size_t> word;
  while (level.schreier[x] >= 0) {
    std::size_t gi = level.gens[static_cast<std::size_t>(level.schreier[x])];
    word.push_back(gi);
    x = strong_inv_[gi][x];
  }
  Permutation u = Permutation::identity(degree_);
  for (auto it = word.rbegin(); it != word.rend(); ++it) u = multiply(u, strong_[*it]);
  return u;
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    Point beta = g[level.base_point];
    if (level.schreier[beta] == -2) return {std::move(g), i};
    while (level.schreier[beta] >= 0) {
      std::size_t gi = level.gens[static_cast<std::size_t>(level.schreier[beta])];
      g = multiply(g, strong_inv_[gi]);
      beta = strong_inv_[gi][beta];
    }
  }
  return {std::move(g), levels_.size()};
}

std::size_t PermGroup::add_strong_generator(Permutation g) {
  strong_inv_.push_back(g.inverse());
  strong_.push_back(std::move(g));
  return strong_.size() - 1;
}

void PermGroup::build() {
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    if (std::find(strong_.begin(), strong_.end(), g) != strong_.end()) continue;
    add_strong_generator(g);
  }
  // Base: greedily extend by the first moved point of any generator that
  // fixes the current base pointwise.
  std::vector<Point> base;
  for (const auto& s : strong_) {
    bool fixes_base = std::all_of(base.begin(), base.end(), [&](Point b) { return s[b] == b; });
    if (fixes_base) base.push_back(s.first_moved_point());
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    Level level;
    level.base_point = base[i];
    for (std::size_t j = 0; j < strong_.size(); ++j) {
      bool fixes_prefix = true;
      for (std::size_t l = 0; l < i && fixes_prefix; ++l) fixes_prefix = strong_[j][base[l]] == base[l];
      if (fixes_prefix) level.gens.push_back(j);
    }
    rebuild_orbit(level);
    levels_.push_back(std::move(level));
  }

  std::size_t i = levels_.size();
  while (i > 0) {
    const std::size_t lv = i - 1;
    bool extended = false;
    for (std::size_t oi = 0; oi < levels_[lv].orbit.size() && !extended; ++oi) {
      const Point beta = levels_[lv].orbit[oi];
      const Permutation u_beta = transversal(levels_[lv], beta);
      for (std::size_t j = 0; j < levels_[lv].gens.size() && !extended; ++j) {
        const Permutation& s = strong_[levels_[lv].gens[j]];
        const Point image = s[beta];
        // Tree edges of the Schreier vector give trivial Schreier generators.
        if (levels_[lv].schreier[image] == static_cast<int>(j) && strong_inv_[levels_[lv].gens[j]][image] == beta)
          continue;
        Permutation h = multiply(multiply(u_beta, s), transversal(levels_[lv], image).inverse());
        auto [residue, stop] = sift(std::move(h), lv + 1);
        if (residue.is_identity()) continue;
        if (stop == levels_.size()) {
          Level level;
          level.base_point = residue.first_moved_point();
          levels_.push_back(std::move(level));
        }
        const std::size_t gi = add_strong_generator(std::move(residue));
        for (std::size_t l = lv + 1; l <= stop; ++l) {
          levels_[l].gens.push_back(gi);
          rebuild_orbit(levels_[l]);
        }
        i = stop + 1;
        extended = true;
      }
    }
    if (!extended) --i;
  }
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  for (const auto& l : levels_) out.push_back(l.base_point);
  return out;
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.orbit.size());
  return out;
}

BigInt PermGroup::order() const {
  BigInt result = 1;
  for (const auto& l : levels_) result *= l.orbit.size();
  return result;
}

std::vector<Point> PermGroup::orbit(Point x) const {
  if (x >= degree_) throw ContractViolation("orbit: point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<Point> out{x};
  seen[x] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (const auto& s : strong_) {
      Point y = s[out[head]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    auto o = orbit(x);
    for (Point y : o) seen[y] = true;
    out.push_back(std::move(o));
  }
  return out;
}

bool PermGroup::is_transitive() const { return degree_ <= 1 || orbit(0).size() == degree_; }

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw ContractViolation("contains: degree mismatch");
  auto [residue, stop] = sift(p, 0);
  return stop == levels_.size() && residue.is_identity();
}

}  // namespace dcstab
