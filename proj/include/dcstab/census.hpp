#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <optional>
#include <vector>

#include "dcstab/graph.hpp"

namespace dcstab {

inline constexpr std::size_t kMaxBuiltinOrder = 8;
inline constexpr std::size_t kMaxBigOrder = 10;

/// Isomorph-free generation of all graphs on n vertices by canonical
/// augmentation (one vertex at a time). Orders above kMaxBuiltinOrder need
/// allow_big; beyond kMaxBigOrder a graph6 stream must be used instead.
void for_each_graph(std::size_t n, const std::function<void(const Graph&)>& visit, bool allow_big = false);
std::vector<Graph> enumerate_graphs(std::size_t n, bool allow_big = false);

/// Reads one graph6 record per line; blank lines and a leading ">>graph6<<"
/// header are skipped. ParseError::line() names the failing line.
void stream_graph6(std::istream& in, const std::function<void(const Graph&)>& visit);
std::vector<Graph> read_graph6_stream(std::istream& in);

struct XabWitness {
  Vertex a1 = 0, a2 = 0, b1 = 0, b2 = 0;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
};

enum class XabReading {
  /// Any labelled occurrence of the construction shape.
  labeled,
  /// Additionally X connected, non-bipartite, twin-free and A u B non-empty.
  strict_base,
};

std::optional<XabWitness> find_xab_witness(const Graph& g, XabReading reading = XabReading::labeled);
inline bool is_xab_realizable(const Graph& g, XabReading reading = XabReading::labeled) {
  return find_xab_witness(g, reading).has_value();
}

struct CensusRow {
  std::size_t n = 0;
  std::size_t cnbtf = 0;  // connected, non-bipartite, twin-free
  std::size_t ntu = 0;    // non-trivially unstable
  std::size_t xab = 0;    // non-trivially unstable and X(A,B)-realizable
  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusOptions {
  std::size_t threads = 1;
  bool collect_ntu = false;
  XabReading reading = XabReading::labeled;
};

struct CensusResult {
  CensusRow row;
  /// Non-trivially unstable inputs in input order (when collected).
  std::vector<Graph> ntu;
};

/// Counts over an exhaustive isomorph-free list of order-n graphs.
CensusResult run_census(std::size_t n, const std::vector<Graph>& graphs, const CensusOptions& options = {});
/// Same as run_census over every record of a graph6 stream, read in batches.
CensusResult run_census_stream(std::size_t n, std::istream& in, const CensusOptions& options = {});
CensusResult run_census_builtin(std::size_t n, const CensusOptions& options = {}, bool allow_big = false);

}  // namespace dcstab
