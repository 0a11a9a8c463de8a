#include "dcstab/census.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <thread>

#include "dcstab/canon.hpp"
#include "dcstab/errors.hpp"
#include "dcstab/graph6.hpp"
#include "dcstab/stability.hpp"

namespace dcstab {

namespace {

Graph add_vertex(const Graph& parent, std::uint32_t neighbours) {
  const auto k = static_cast<Vertex>(parent.order());
  GraphBuilder b(k + 1);
  for (auto [u, v] : parent.edges()) b.add_edge(u, v);
  for (Vertex v = 0; v < k; ++v)
    if ((neighbours >> v) & 1u) b.add_edge(v, k);
  return std::move(b).build();
}

// One neighbourhood mask per orbit of Aut(parent) acting on subsets.
std::vector<std::uint32_t> subset_orbit_representatives(std::size_t k, const std::vector<Permutation>& gens) {
  const std::uint32_t total = std::uint32_t{1} << k;
  std::vector<std::uint32_t> rep(total);
  std::iota(rep.begin(), rep.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (rep[x] != x) x = rep[x] = rep[rep[x]];
    return x;
  };
  for (const auto& g : gens) {
    for (std::uint32_t s = 0; s < total; ++s) {
      std::uint32_t image = 0;
      for (Vertex v = 0; v < k; ++v)
        if ((s >> v) & 1u) image |= std::uint32_t{1} << g[v];
      auto a = find(s), b = find(image);
      if (a != b) rep[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < total; ++s)
    if (find(s) == s) out.push_back(s);
  return out;
}

void extend(const Graph& parent, const std::vector<Permutation>& parent_gens, std::size_t n,
            const std::function<void(const Graph&)>& visit) {
  const std::size_t k = parent.order();
  const auto child_vertex = static_cast<Vertex>(k);
  for (std::uint32_t mask : subset_orbit_representatives(k, parent_gens)) {
    Graph child = add_vertex(parent, mask);
    CanonicalForm cf = canonical_form(child);
    // Canonical deletion: the vertex in the last canonical position. The
    // augmentation is accepted iff the new vertex lies in its orbit.
    Vertex last = 0;
    for (Vertex v = 0; v <= k; ++v)
      if (cf.relabeling[v] == k) last = v;
    auto reps = orbit_representatives(k + 1, cf.aut_generators);
    if (reps[last] != reps[child_vertex]) continue;
    if (k + 1 == n)
      visit(child);
    else
      extend(child, cf.aut_generators, n, visit);
  }
}

[[noreturn]] void fail_line(const ParseError& e, std::size_t line) {
  throw ParseError("line " + std::to_string(line) + ": " + e.what(), e.offset(), line);
}

}  // namespace

void for_each_graph(std::size_t n, const std::function<void(const Graph&)>& visit, bool allow_big) {
  if (n > kMaxBigOrder || (n > kMaxBuiltinOrder && !allow_big))
    throw ContractViolation("enumerate_graphs: order " + std::to_string(n) +
                            " is too large for built-in generation; supply a graph6 stream instead");
  if (n == 0) {
    visit(Graph{});
    return;
  }
  Graph single = GraphBuilder(1).build();
  if (n == 1) {
    visit(single);
    return;
  }
  extend(single, {}, n, visit);
}

std::vector<Graph> enumerate_graphs(std::size_t n, bool allow_big) {
  std::vector<Graph> out;
  for_each_graph(n, [&](const Graph& g) { out.push_back(g); }, allow_big);
  return out;
}

void stream_graph6(std::istream& in, const std::function<void(const Graph&)>& visit) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string_view record = line;
    if (number == 1 && record.starts_with(">>graph6<<")) record.remove_prefix(10);
    if (record.empty()) continue;
    try {
      visit(parse_graph6(record));
    } catch (const ParseError& e) {
      fail_line(e, number);
    }
  }
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  stream_graph6(in, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::optional<XabWitness> find_xab_witness(const Graph& g, XabReading reading) {
  const std::size_t n = g.order();
  if (n < 4) return std::nullopt;
  auto edges = g.edges();
  // Both orientations of every edge serve as (a, b) candidates.
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (auto [u, v] : edges) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  for (auto [a1, b1] : arcs) {
    VertexSet na1 = g.neighbors(a1), nb1 = g.neighbors(b1);
    na1.erase(b1);
    nb1.erase(a1);
    for (auto [a2, b2] : arcs) {
      if (a2 == a1 || a2 == b1 || b2 == a1 || b2 == b1) continue;
      if (g.adjacent(a1, a2) || g.adjacent(a1, b2) || g.adjacent(b1, a2) || g.adjacent(b1, b2)) continue;
      VertexSet na2 = g.neighbors(a2), nb2 = g.neighbors(b2);
      na2.erase(b2);
      nb2.erase(a2);
      if (na1 != na2 || nb1 != nb2) continue;
      XabWitness w{a1, a2, b1, b2, na1.to_vector(), nb1.to_vector()};
      if (reading == XabReading::strict_base) {
        VertexSet keep(n);
        for (Vertex v = 0; v < n; ++v) keep.insert(v);
        for (Vertex v : {a1, a2, b1, b2}) keep.erase(v);
        Graph x = induced_subgraph(g, keep).graph;
        if (w.a.empty() && w.b.empty()) continue;
        if (!is_connected(x) || is_bipartite(x) || !is_twin_free(x)) continue;
      }
      return w;
    }
  }
  return std::nullopt;
}

CensusResult run_census(std::size_t n, const std::vector<Graph>& graphs, const CensusOptions& options) {
  for (const auto& g : graphs)
    if (g.order() != n) throw ContractViolation("census: input graph of order " + std::to_string(g.order()) +
                                                " in a census of order " + std::to_string(n));
  // 0: filtered out, 1: cnbtf and stable, 2: non-trivially unstable, 3: also X(A,B).
  std::vector<std::uint8_t> kind(graphs.size(), 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      const Graph& g = graphs[i];
      if (!is_connected(g) || is_bipartite(g) || !is_twin_free(g)) continue;
      const auto report = stability_report(g);
      if (report.stable) {
        kind[i] = 1;
      } else {
        kind[i] = is_xab_realizable(g, options.reading) ? 3 : 2;
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, options.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  CensusResult result;
  result.row.n = n;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (kind[i] >= 1) ++result.row.cnbtf;
    if (kind[i] >= 2) {
      ++result.row.ntu;
      if (options.collect_ntu) result.ntu.push_back(graphs[i]);
    }
    if (kind[i] == 3) ++result.row.xab;
  }
  return result;
}

namespace {

constexpr std::size_t kBatchSize = std::size_t{1} << 15;

// Feeds the graphs from `produce` through run_census in fixed-size batches so
// large orders never hold the whole list in memory.
CensusResult run_batched(std::size_t n, const CensusOptions& options,
                         const std::function<void(const std::function<void(const Graph&)>&)>& produce) {
  CensusResult total;
  total.row.n = n;
  std::vector<Graph> batch;
  auto flush = [&] {
    CensusResult part = run_census(n, batch, options);
    total.row.cnbtf += part.row.cnbtf;
    total.row.ntu += part.row.ntu;
    total.row.xab += part.row.xab;
    for (auto& g : part.ntu) total.ntu.push_back(std::move(g));
    batch.clear();
  };
  produce([&](const Graph& g) {
    batch.push_back(g);
    if (batch.size() == kBatchSize) flush();
  });
  flush();
  return total;
}

}  // namespace

CensusResult run_census_builtin(std::size_t n, const CensusOptions& options, bool allow_big) {
  return run_batched(n, options, [&](const auto& visit) { for_each_graph(n, visit, allow_big); });
}

CensusResult run_census_stream(std::size_t n, std::istream& in, const CensusOptions& options) {
  return run_batched(n, options, [&](const auto& visit) { stream_graph6(in, visit); });
}

}  // namespace dcstab
