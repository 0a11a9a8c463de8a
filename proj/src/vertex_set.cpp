#include "dcstab/vertex_set.hpp"

#include <algorithm>

#include "dcstab/errors.hpp"

namespace dcstab {

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) {
    if (v >= universe) throw ContractViolation("VertexSet: member out of range");
    insert(v);
  }
}

VertexSet VertexSet::from_words(std::size_t universe, std::span<const std::uint64_t> words) {
  VertexSet s(universe);
  std::copy_n(words.begin(), std::min(words.size(), s.words_.size()), s.words_.begin());
  if (universe % 64 != 0 && !s.words_.empty())
    s.words_.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  if (universe_ != other.universe_) throw ContractViolation("VertexSet: universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (universe_ != other.universe_) throw ContractViolation("VertexSet: universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  if (universe_ != other.universe_) throw ContractViolation("VertexSet: universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  if (universe_ != other.universe_) throw ContractViolation("VertexSet: universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

HypothesisError::HypothesisError(std::vector<std::string> failures)
    : ContractViolation([&] {
        std::string msg = "hypotheses not met:";
        for (const auto& f : failures) msg += " [" + f + "]";
        return msg;
      }()),
      failures_(std::move(failures)) {}

}  // namespace dcstab
