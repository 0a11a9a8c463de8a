#include "dcstab/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "dcstab/errors.hpp"

namespace dcstab {

GraphBuilder::GraphBuilder(std::size_t order)
    : order_(order), words_per_row_((order + 63) / 64), bits_(order * words_per_row_, 0) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= order_ || v >= order_) throw ContractViolation("add_edge: vertex out of range");
  if (u == v) throw ContractViolation("add_edge: loops are not allowed");
  bits_[u * words_per_row_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[v * words_per_row_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  if (u >= order_ || v >= order_) throw ContractViolation("remove_edge: vertex out of range");
  bits_[u * words_per_row_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[v * words_per_row_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  return *this;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= order_ || v >= order_) return false;
  return (bits_[u * words_per_row_ + (v >> 6)] >> (v & 63)) & 1u;
}

GraphBuilder& GraphBuilder::set_label(std::string label) {
  label_ = std::move(label);
  return *this;
}

namespace {
std::size_t count_edges(const std::vector<std::uint64_t>& bits) {
  std::size_t twice = 0;
  for (auto w : bits) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}
}  // namespace

Graph GraphBuilder::build() const& {
  Graph g;
  g.order_ = order_;
  g.words_per_row_ = words_per_row_;
  g.bits_ = bits_;
  g.num_edges_ = count_edges(g.bits_);
  g.label_ = label_;
  return g;
}

Graph GraphBuilder::build() && {
  Graph g;
  g.order_ = order_;
  g.words_per_row_ = words_per_row_;
  g.bits_ = std::move(bits_);
  g.num_edges_ = count_edges(g.bits_);
  g.label_ = std::move(label_);
  return g;
}

Graph Graph::from_edges(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges,
                        std::string label) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  b.set_label(std::move(label));
  return std::move(b).build();
}

std::size_t Graph::degree(Vertex v) const noexcept {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

VertexSet Graph::neighbors(Vertex v) const { return VertexSet::from_words(order_, row(v)); }

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < order_; ++u)
    for (Vertex v = u + 1; v < order_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_label(std::string label) const {
  Graph copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

DistancePartition distance_partition(const Graph& g, Vertex x) {
  const std::size_t n = g.order();
  if (x >= n) throw ContractViolation("distance_partition: source out of range");
  DistancePartition dp;
  dp.source = x;
  dp.distance.assign(n, -1);
  dp.distance[x] = 0;
  std::vector<Vertex> frontier{x};
  while (!frontier.empty()) {
    dp.layers.push_back(frontier);
    std::vector<Vertex> next;
    const int d = static_cast<int>(dp.layers.size());
    for (Vertex u : frontier) {
      g.neighbors(u).for_each([&](Vertex w) {
        if (dp.distance[w] < 0) {
          dp.distance[w] = d;
          next.push_back(w);
        }
      });
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  for (Vertex v = 0; v < n; ++v)
    if (dp.distance[v] < 0) dp.unreachable.push_back(v);
  return dp;
}

std::vector<int> distance_matrix(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> dist(n * n, -1);
  for (Vertex x = 0; x < n; ++x) {
    auto dp = distance_partition(g, x);
    std::copy(dp.distance.begin(), dp.distance.end(), dist.begin() + x * n);
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return distance_partition(g, 0).unreachable.empty();
}

bool is_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      bool ok = true;
      g.neighbors(u).for_each([&](Vertex w) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool is_twin_free(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  auto row_less = [&](Vertex a, Vertex b) {
    auto ra = g.row(a), rb = g.row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  };
  std::sort(order.begin(), order.end(), row_less);
  for (std::size_t i = 1; i < n; ++i) {
    auto ra = g.row(order[i - 1]), rb = g.row(order[i]);
    if (std::equal(ra.begin(), ra.end(), rb.begin())) return false;
  }
  return true;
}

std::size_t common_neighbor_count(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) throw ContractViolation("common_neighbors: vertex out of range");
  if (u == v) throw ContractViolation("common_neighbors: requires distinct vertices");
  auto ru = g.row(u), rv = g.row(v);
  std::size_t c = 0;
  for (std::size_t i = 0; i < ru.size(); ++i) c += static_cast<std::size_t>(std::popcount(ru[i] & rv[i]));
  return c;
}

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) throw ContractViolation("common_neighbors: vertex out of range");
  if (u == v) throw ContractViolation("common_neighbors: requires distinct vertices");
  return g.neighbors(u) & g.neighbors(v);
}

bool every_edge_on_triangle(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (common_neighbor_count(g, u, v) == 0) return false;
  return true;
}

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (common_neighbor_count(g, u, v) != 0) return false;
  return true;
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    auto dp = distance_partition(g, x);
    if (!dp.unreachable.empty()) return std::nullopt;
    best = std::max(best, dp.eccentricity());
  }
  return best;
}

StructuralProfile structural_profile(const Graph& g, const TransitivityOracle& transitive) {
  StructuralProfile p;
  p.diameter = diameter(g);
  p.connected = p.diameter.has_value();
  p.bipartite = is_bipartite(g);
  p.twin_free = is_twin_free(g);
  p.every_edge_on_triangle = true;
  p.triangle_free = true;
  for (auto [u, v] : g.edges()) {
    if (common_neighbor_count(g, u, v) == 0)
      p.every_edge_on_triangle = false;
    else
      p.triangle_free = false;
  }
  if (transitive) p.vertex_transitive = transitive(g);
  return p;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != g.order()) throw ContractViolation("induced_subgraph: universe mismatch");
  InducedSubgraph out;
  out.old_to_new.assign(g.order(), kNoVertex);
  out.new_to_old = keep.to_vector();
  for (std::size_t i = 0; i < out.new_to_old.size(); ++i) out.old_to_new[out.new_to_old[i]] = static_cast<Vertex>(i);
  GraphBuilder b(out.new_to_old.size());
  for (std::size_t i = 0; i < out.new_to_old.size(); ++i)
    for (std::size_t j = i + 1; j < out.new_to_old.size(); ++j)
      if (g.adjacent(out.new_to_old[i], out.new_to_old[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  out.graph = std::move(b).build();
  return out;
}

}  // namespace dcstab
