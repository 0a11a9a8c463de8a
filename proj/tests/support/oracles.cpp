#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace oracle {

std::uint64_t count_automorphisms(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::uint32_t u = 0; u < n && ok; ++u)
      for (std::uint32_t v = u + 1; v < n && ok; ++v)
        if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

std::set<std::vector<std::uint32_t>> closure(std::size_t degree, const std::vector<dcstab::Permutation>& gens) {
  std::vector<std::uint32_t> id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::set<std::vector<std::uint32_t>> seen{id};
  std::deque<std::vector<std::uint32_t>> todo{id};
  while (!todo.empty()) {
    auto cur = todo.front();
    todo.pop_front();
    for (const auto& s : gens) {
      std::vector<std::uint32_t> next(degree);
      for (std::size_t i = 0; i < degree; ++i) next[i] = s[cur[i]];
      if (seen.insert(next).second) todo.push_back(std::move(next));
    }
  }
  return seen;
}

std::vector<int> all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  const int inf = 1 << 28;
  std::vector<int> d(n * n, inf);
  for (std::uint32_t u = 0; u < n; ++u) {
    d[u * n + u] = 0;
    for (std::uint32_t v = 0; v < n; ++v)
      if (g.adjacent(u, v)) d[u * n + v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  for (auto& x : d)
    if (x >= inf) x = -1;
  return d;
}

std::string graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  std::vector<int> bits;
  for (std::uint32_t j = 1; j < n; ++j)
    for (std::uint32_t i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = v * 2 + bits[i + b];
    out += static_cast<char>(v + 63);
  }
  return out;
}

std::vector<bool> brute_certificate(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<bool> best;
  do {
    std::vector<bool> cur;
    for (std::uint32_t j = 1; j < n; ++j)
      for (std::uint32_t i = 0; i < j; ++i) cur.push_back(g.adjacent(p[i], p[j]));
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::size_t count_classes_bruteforce(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t j = 1; j < n; ++j)
    for (std::uint32_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::set<std::vector<bool>> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if ((mask >> e) & 1) edges.push_back(pairs[e]);
    classes.insert(brute_certificate(Graph::from_edges(n, edges)));
  }
  return classes.size();
}

bool twin_free(const Graph& g) {
  const std::size_t n = g.order();
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) {
      bool same = true;
      for (std::uint32_t w = 0; w < n && same; ++w)
        if (g.adjacent(u, w) != g.adjacent(v, w)) same = false;
      if (same) return false;
    }
  return true;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t j = 1; j < n; ++j)
    for (std::uint32_t i = 0; i < j; ++i)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

dcstab::Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return dcstab::Permutation(p);
}

}  // namespace oracle
