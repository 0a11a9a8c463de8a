#include "dcstab/canon.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>

#include "dcstab/errors.hpp"
#include "dcstab/graph6.hpp"

namespace dcstab {

OrderedPartition OrderedPartition::unit(std::size_t n) {
  OrderedPartition p;
  if (n == 0) return p;
  p.cells.emplace_back(n);
  std::iota(p.cells[0].begin(), p.cells[0].end(), Vertex{0});
  return p;
}

void OrderedPartition::validate(std::size_t n) const {
  std::vector<bool> seen(n, false);
  std::size_t total = 0;
  for (const auto& cell : cells) {
    if (cell.empty()) throw ContractViolation("OrderedPartition: empty cell");
    for (Vertex v : cell) {
      if (v >= n || seen[v]) throw ContractViolation("OrderedPartition: cells are not a partition of the vertex set");
      seen[v] = true;
      ++total;
    }
  }
  if (total != n) throw ContractViolation("OrderedPartition: cells do not cover the vertex set");
}

bool OrderedPartition::is_discrete() const noexcept {
  return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.size() == 1; });
}

namespace {

constexpr std::size_t kNoJump = std::numeric_limits<std::size_t>::max();

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  std::uint64_t z = h + 0x9e3779b97f4a7c15ULL + x * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Ordered partition as contiguous position ranges of `lab`.
struct Cells {
  std::vector<Vertex> lab;
  std::vector<std::uint32_t> start_of;  // vertex -> start position of its cell
  std::vector<std::uint32_t> end_at;    // cell start -> one past its last position
  std::size_t count = 0;

  static Cells from(const OrderedPartition& p, std::size_t n) {
    Cells c;
    c.start_of.resize(n);
    c.end_at.resize(n);
    for (const auto& cell : p.cells) {
      auto start = static_cast<std::uint32_t>(c.lab.size());
      for (Vertex v : cell) {
        c.start_of[v] = start;
        c.lab.push_back(v);
      }
      c.end_at[start] = static_cast<std::uint32_t>(c.lab.size());
      ++c.count;
    }
    return c;
  }

  bool discrete() const noexcept { return count == lab.size(); }

  std::vector<std::uint32_t> starts() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < lab.size(); s = end_at[s]) out.push_back(s);
    return out;
  }

  OrderedPartition to_partition() const {
    OrderedPartition p;
    for (std::uint32_t s = 0; s < lab.size(); s = end_at[s]) p.cells.emplace_back(lab.begin() + s, lab.begin() + end_at[s]);
    return p;
  }

  // Splits {v} off the front of v's cell.
  void individualize(Vertex v) {
    std::uint32_t s = start_of[v];
    std::uint32_t e = end_at[s];
    auto it = std::find(lab.begin() + s, lab.begin() + e, v);
    std::iter_swap(lab.begin() + s, it);
    end_at[s] = s + 1;
    end_at[s + 1] = e;
    for (std::uint32_t p = s + 1; p < e; ++p) start_of[lab[p]] = s + 1;
    ++count;
  }
};

class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g), counts_(g.order(), 0), queued_(g.order(), 0), cell_touched_(g.order(), 0) {}

  // Refines c to the coarsest equitable partition below it, starting from
  // the given splitter cells. Returns an isomorphism-invariant trace.
  std::uint64_t refine(Cells& c, const std::vector<std::uint32_t>& splitters) {
    std::uint64_t h = 0x51ed27ULL;
    for (auto s : splitters) push(s);
    std::vector<Vertex> touched;
    std::vector<std::uint32_t> cells;
    std::vector<std::pair<std::uint32_t, Vertex>> keyed;
    while (!queue_.empty()) {
      const std::uint32_t s = queue_.front();
      queue_.pop_front();
      queued_[s] = 0;
      const std::uint32_t e = c.end_at[s];
      h = mix(mix(h, s), e - s);

      touched.clear();
      for (std::uint32_t p = s; p < e; ++p) {
        auto row = g_.row(c.lab[p]);
        for (std::size_t wi = 0; wi < row.size(); ++wi) {
          std::uint64_t bits = row[wi];
          while (bits) {
            auto v = static_cast<Vertex>(wi * 64 + std::countr_zero(bits));
            bits &= bits - 1;
            if (counts_[v]++ == 0) touched.push_back(v);
          }
        }
      }
      cells.clear();
      for (Vertex v : touched) {
        auto cs = c.start_of[v];
        if (!cell_touched_[cs]) {
          cell_touched_[cs] = 1;
          cells.push_back(cs);
        }
      }
      std::sort(cells.begin(), cells.end());

      for (auto cs : cells) {
        cell_touched_[cs] = 0;
        const std::uint32_t ce = c.end_at[cs];
        if (ce - cs == 1) {
          h = mix(mix(h, cs), counts_[c.lab[cs]]);
          continue;
        }
        keyed.clear();
        for (std::uint32_t p = cs; p < ce; ++p) keyed.emplace_back(counts_[c.lab[p]], c.lab[p]);
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first) {
          h = mix(mix(h, cs), keyed.front().first);
          continue;
        }
        // Write fragments back in ascending count order.
        std::vector<std::pair<std::uint32_t, std::uint32_t>> frags;  // [start, end)
        std::uint32_t fs = cs;
        for (std::uint32_t i = 0; i < keyed.size(); ++i) {
          c.lab[cs + i] = keyed[i].second;
          if (i + 1 == keyed.size() || keyed[i + 1].first != keyed[i].first) {
            frags.emplace_back(fs, cs + i + 1);
            fs = cs + i + 1;
          }
        }
        h = mix(mix(h, cs), frags.size());
        for (auto [a, b] : frags) {
          c.end_at[a] = b;
          for (std::uint32_t p = a; p < b; ++p) c.start_of[c.lab[p]] = a;
          h = mix(mix(h, counts_[c.lab[a]]), b - a);
        }
        c.count += frags.size() - 1;
        if (queued_[cs]) {
          for (auto [a, b] : frags)
            if (a != cs) push(a);
        } else {
          std::size_t largest = 0;
          for (std::size_t i = 1; i < frags.size(); ++i)
            if (frags[i].second - frags[i].first > frags[largest].second - frags[largest].first) largest = i;
          for (std::size_t i = 0; i < frags.size(); ++i)
            if (i != largest) push(frags[i].first);
        }
      }
      for (Vertex v : touched) counts_[v] = 0;
    }
    return mix(h, c.count);
  }

 private:
  void push(std::uint32_t s) {
    if (!queued_[s]) {
      queued_[s] = 1;
      queue_.push_back(s);
    }
  }

  const Graph& g_;
  std::vector<std::uint32_t> counts_;
  std::vector<char> queued_;
  std::vector<char> cell_touched_;
  std::deque<std::uint32_t> queue_;
};

// Minimum-point orbit representative under gens that fix `fixed` pointwise.
std::vector<Point> stabilizer_orbit_reps(std::size_t n, const std::vector<Permutation>& gens,
                                         std::span<const Vertex> fixed) {
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens) {
    if (!std::all_of(fixed.begin(), fixed.end(), [&](Vertex v) { return g[v] == v; })) continue;
    for (Point x = 0; x < n; ++x) {
      Point a = find(x), b = find(g[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  for (Point x = 0; x < n; ++x) parent[x] = find(x);
  return parent;
}

class Search {
 public:
  Search(const Graph& g, Cells root) : g_(g), n_(g.order()), refiner_(g) {
    stack_.resize(n_ + 1);
    trace_.resize(n_ + 1);
    eq_first_.resize(n_ + 1, 1);
    path_.resize(n_);
    stack_[0] = std::move(root);
    trace_[0] = refiner_.refine(stack_[0], stack_[0].starts());
  }

  CanonicalForm run() {
    visit(0);
    CanonicalForm out;
    std::vector<Point> relabel(n_);
    for (std::size_t i = 0; i < n_; ++i) relabel[best_lab_[i]] = static_cast<Point>(i);
    out.relabeling = Permutation(std::move(relabel));
    out.canonical_graph = permute(g_, out.relabeling);
    out.canonical_graph6 = write_graph6(out.canonical_graph);
    out.aut_generators = gens_;
    out.nodes_visited = nodes_;
    for (std::size_t level = 0; level < first_path_.size(); ++level) {
      auto reps = stabilizer_orbit_reps(n_, gens_, std::span(first_path_).first(level));
      auto rep = reps[first_path_[level]];
      out.search_group_order *= static_cast<std::size_t>(std::count(reps.begin(), reps.end(), rep));
    }
    return out;
  }

 private:
  std::size_t visit(std::size_t level) {
    ++nodes_;
    if (stack_[level].discrete()) return leaf(level);

    const Cells& c = stack_[level];
    std::uint32_t target = 0;
    std::uint32_t target_size = 0;
    for (std::uint32_t s = 0; s < n_; s = c.end_at[s]) {
      if (c.end_at[s] - s > target_size) {
        target = s;
        target_size = c.end_at[s] - s;
      }
    }
    std::vector<Vertex> candidates(c.lab.begin() + target, c.lab.begin() + c.end_at[target]);
    std::sort(candidates.begin(), candidates.end());

    std::size_t gens_seen = std::numeric_limits<std::size_t>::max();
    std::vector<Point> reps;
    for (Vertex w : candidates) {
      if (gens_seen != gens_.size()) {
        reps = stabilizer_orbit_reps(n_, gens_, std::span(path_).first(level));
        gens_seen = gens_.size();
      }
      if (reps[w] != w) continue;

      stack_[level + 1] = stack_[level];
      Cells& child = stack_[level + 1];
      const std::uint32_t singleton = child.start_of[w];
      child.individualize(w);
      trace_[level + 1] = refiner_.refine(child, {singleton});
      path_[level] = w;
      if (have_first_) {
        eq_first_[level + 1] = eq_first_[level] && level + 1 < first_trace_.size() &&
                               first_trace_[level + 1] == trace_[level + 1];
        if (!eq_first_[level + 1] && compare_best(level + 1) < 0) continue;
      }
      std::size_t jump = visit(level + 1);
      if (jump != kNoJump && jump < level) return jump;
    }
    return kNoJump;
  }

  // Lexicographic comparison of the current trace prefix against the best path.
  int compare_best(std::size_t level) const {
    for (std::size_t i = 0; i <= level; ++i) {
      if (i >= best_trace_.size()) return 1;
      if (trace_[i] != best_trace_[i]) return trace_[i] < best_trace_[i] ? -1 : 1;
    }
    return 0;
  }

  std::vector<std::uint64_t> adjacency_under(const std::vector<Vertex>& lab) const {
    const std::size_t words = (n_ + 63) / 64;
    std::vector<std::uint64_t> m(n_ * words, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (g_.adjacent(lab[i], lab[j])) m[i * words + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    return m;
  }

  Permutation leaf_map(const std::vector<Vertex>& from, const std::vector<Vertex>& to) const {
    std::vector<Point> images(n_);
    for (std::size_t i = 0; i < n_; ++i) images[from[i]] = to[i];
    return Permutation::unchecked(std::move(images));
  }

  void add_generator(Permutation p) {
    if (p.is_identity()) return;
    if (std::find(gens_.begin(), gens_.end(), p) != gens_.end()) return;
    gens_.push_back(std::move(p));
  }

  std::size_t leaf(std::size_t level) {
    const auto& lab = stack_[level].lab;
    auto matrix = adjacency_under(lab);
    if (!have_first_) {
      have_first_ = true;
      first_path_.assign(path_.begin(), path_.begin() + level);
      first_trace_.assign(trace_.begin(), trace_.begin() + level + 1);
      first_lab_ = lab;
      first_matrix_ = matrix;
      best_trace_ = first_trace_;
      best_lab_ = lab;
      best_matrix_ = std::move(matrix);
      return kNoJump;
    }
    if (eq_first_[level] && level + 1 == first_trace_.size() && matrix == first_matrix_) {
      Permutation gamma = leaf_map(lab, first_lab_);
      std::size_t common = 0;
      while (common < level && path_[common] == first_path_[common]) ++common;
      bool maps_path = true;
      for (std::size_t i = 0; i < level && maps_path; ++i) maps_path = gamma[path_[i]] == first_path_[i];
      add_generator(std::move(gamma));
      return maps_path ? common : kNoJump;
    }
    int cmp = compare_best(level);
    if (cmp == 0 && level + 1 < best_trace_.size()) cmp = -1;
    if (cmp > 0 || (cmp == 0 && matrix > best_matrix_)) {
      best_trace_.assign(trace_.begin(), trace_.begin() + level + 1);
      best_lab_ = lab;
      best_matrix_ = std::move(matrix);
    } else if (cmp == 0 && matrix == best_matrix_) {
      add_generator(leaf_map(lab, best_lab_));
    }
    return kNoJump;
  }

  const Graph& g_;
  std::size_t n_;
  Refiner refiner_;
  std::vector<Cells> stack_;
  std::vector<std::uint64_t> trace_;
  std::vector<char> eq_first_;
  std::vector<Vertex> path_;

  bool have_first_ = false;
  std::vector<Vertex> first_path_;
  std::vector<std::uint64_t> first_trace_;
  std::vector<Vertex> first_lab_;
  std::vector<std::uint64_t> first_matrix_;

  std::vector<std::uint64_t> best_trace_;
  std::vector<Vertex> best_lab_;
  std::vector<std::uint64_t> best_matrix_;

  std::vector<Permutation> gens_;
  std::size_t nodes_ = 0;
};

}  // namespace

OrderedPartition refine(const Graph& g, const OrderedPartition& p) {
  p.validate(g.order());
  Cells c = Cells::from(p, g.order());
  Refiner r(g);
  r.refine(c, c.starts());
  return c.to_partition();
}

CanonicalForm canonical_form(const Graph& g, const std::optional<OrderedPartition>& colouring) {
  const std::size_t n = g.order();
  OrderedPartition initial = colouring ? *colouring : OrderedPartition::unit(n);
  initial.validate(n);
  if (n == 0) {
    CanonicalForm out;
    out.relabeling = Permutation::identity(0);
    out.canonical_graph = g;
    out.canonical_graph6 = write_graph6(g);
    return out;
  }
  Search search(g, Cells::from(initial, n));
  return search.run();
}

PermGroup automorphism_group(const Graph& g, const std::optional<OrderedPartition>& colouring) {
  return PermGroup(g.order(), canonical_form(g, colouring).aut_generators);
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.num_edges() != h.num_edges()) return false;
  return canonical_form(g).canonical_graph == canonical_form(h).canonical_graph;
}

Graph permute(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) throw ContractViolation("permute: degree mismatch");
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(p[u], p[v]);
  b.set_label(g.label());
  return std::move(b).build();
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p[u], p[v])) return false;
  return true;
}

std::vector<Point> orbit_representatives(std::size_t degree, const std::vector<Permutation>& gens) {
  return stabilizer_orbit_reps(degree, gens, {});
}

}  // namespace dcstab
