#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "dcstab/graph.hpp"

namespace dcstab {

inline constexpr std::size_t kMaxGraph6Order = std::size_t{1} << 18;

/// Decodes one graph6 record (no ">>graph6<<" header, no newline).
/// Only canonical records are accepted: shortest length prefix and zero
/// padding bits. Throws ParseError carrying the offending byte offset.
Graph parse_graph6(std::string_view record);

std::string write_graph6(const Graph& g);

}  // namespace dcstab
