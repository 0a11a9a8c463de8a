#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dcstab/vertex_set.hpp"

namespace dcstab {

class Graph;

/// Mutable accumulator for a simple undirected graph on {0..n-1}.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  /// Adds {u, v}; loops and out-of-range endpoints throw ContractViolation.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const noexcept;
  GraphBuilder& set_label(std::string label);

  Graph build() const&;
  Graph build() &&;

 private:
  friend class Graph;
  std::size_t order_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> bits_;
  std::string label_;
};

/// Immutable simple undirected graph with dense bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  static Graph from_edges(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges,
                          std::string label = {});

  std::size_t order() const noexcept { return order_; }
  std::size_t num_edges() const noexcept { return num_edges_; }
  const std::string& label() const noexcept { return label_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (bits_[u * words_per_row_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {bits_.data() + v * words_per_row_, words_per_row_};
  }
  std::size_t words_per_row() const noexcept { return words_per_row_; }
  std::size_t degree(Vertex v) const noexcept;
  VertexSet neighbors(Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  Graph with_label(std::string label) const;

  /// Vertex-for-vertex equality of the edge sets; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.bits_ == b.bits_;
  }

 private:
  friend class GraphBuilder;
  std::size_t order_ = 0;
  std::size_t words_per_row_ = 0;
  std::size_t num_edges_ = 0;
  std::vector<std::uint64_t> bits_;
  std::string label_;
};

/// Breadth-first layers X_0(x), X_1(x), ... around a source vertex.
struct DistancePartition {
  Vertex source = 0;
  std::vector<std::vector<Vertex>> layers;
  std::vector<Vertex> unreachable;
  /// distance[v] is the layer index of v, or -1 when v is unreachable.
  std::vector<int> distance;

  std::size_t eccentricity() const noexcept { return layers.empty() ? 0 : layers.size() - 1; }
  std::span<const Vertex> layer(std::size_t i) const noexcept {
    if (i >= layers.size()) return {};
    return layers[i];
  }
};

DistancePartition distance_partition(const Graph& g, Vertex x);

/// All-pairs shortest-path lengths, -1 for unreachable pairs. Row-major n*n.
std::vector<int> distance_matrix(const Graph& g);

struct StructuralProfile {
  bool connected = true;
  bool bipartite = true;
  /// nullopt means infinite (disconnected graph).
  std::optional<std::size_t> diameter;
  bool twin_free = true;
  bool every_edge_on_triangle = true;
  bool triangle_free = true;
  /// Only filled when a transitivity oracle was supplied.
  std::optional<bool> vertex_transitive;
};

using TransitivityOracle = std::function<bool(const Graph&)>;

StructuralProfile structural_profile(const Graph& g, const TransitivityOracle& transitive = {});

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
/// Open-neighbourhood twins: distinct u, v with N(u) = N(v).
bool is_twin_free(const Graph& g);
bool every_edge_on_triangle(const Graph& g);
bool is_triangle_free(const Graph& g);
std::optional<std::size_t> diameter(const Graph& g);

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v);
std::size_t common_neighbor_count(const Graph& g, Vertex u, Vertex v);

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

struct InducedSubgraph {
  Graph graph;
  /// old_to_new[v] is v's index in graph, or kNoVertex when v was dropped.
  std::vector<Vertex> old_to_new;
  std::vector<Vertex> new_to_old;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace dcstab
