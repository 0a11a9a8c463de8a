#include "dcstab/criteria.hpp"

#include <algorithm>
#include <set>

#include "dcstab/errors.hpp"

namespace dcstab {

namespace {

struct Metric {
  std::size_t n;
  std::vector<int> dist;
  int at(Vertex u, Vertex v) const { return dist[u * n + v]; }
};

Metric metric(const Graph& g) { return Metric{g.order(), distance_matrix(g)}; }

bool regular(const Graph& g, std::size_t& k) {
  k = g.order() ? g.degree(0) : 0;
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

CriterionVerdict finish(CriterionVerdict v) {
  v.applies = v.failed_hypotheses.empty();
  v.implied = v.applies ? Implication::stable : Implication::none;
  return v;
}

}  // namespace

std::optional<SrgParams> srg_params(const Graph& g) {
  std::size_t k = 0;
  if (g.order() < 2 || !regular(g, k)) return std::nullopt;
  auto d = diameter(g);
  if (!d || *d != 2) return std::nullopt;
  std::optional<std::size_t> lambda, mu;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      std::size_t c = common_neighbor_count(g, u, v);
      if (!slot) slot = c;
      else if (*slot != c) return std::nullopt;
    }
  }
  return SrgParams{g.order(), k, lambda.value_or(0), mu.value_or(0)};
}

std::optional<IntersectionArray> intersection_array(const Graph& g) {
  std::size_t k = 0;
  if (g.order() == 0 || !regular(g, k)) return std::nullopt;
  auto diam = diameter(g);
  if (!diam) return std::nullopt;
  const auto m = metric(g);
  IntersectionArray a;
  a.diameter = *diam;
  std::vector<std::optional<std::size_t>> b(a.diameter), c(a.diameter);
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = 0; y < g.order(); ++y) {
      const int j = m.at(x, y);
      std::size_t out = 0, in = 0;
      g.neighbors(y).for_each([&](Vertex z) {
        if (m.at(x, z) == j + 1) ++out;
        if (m.at(x, z) == j - 1) ++in;
      });
      if (static_cast<std::size_t>(j) < a.diameter) {
        auto& slot = b[static_cast<std::size_t>(j)];
        if (!slot) slot = out;
        else if (*slot != out) return std::nullopt;
      }
      if (j >= 1) {
        auto& slot = c[static_cast<std::size_t>(j - 1)];
        if (!slot) slot = in;
        else if (*slot != in) return std::nullopt;
      }
    }
  }
  for (auto& v : b) a.b.push_back(*v);
  for (auto& v : c) a.c.push_back(*v);
  return a;
}

CriterionVerdict check_surowski_fixed(const Graph& g) {
  CriterionVerdict v;
  v.id = "surowski_fixed";
  if (g.order() < 2) v.failed_hypotheses.push_back("non-trivial");
  const bool connected = is_connected(g);
  if (!connected) v.failed_hypotheses.push_back("connected");
  if (!every_edge_on_triangle(g)) v.failed_hypotheses.push_back("every edge lies on a triangle");
  if (!connected || g.order() < 2) return finish(std::move(v));

  const auto m = metric(g);
  bool second_shell_nonempty = true, cond_a = true, cond_b = true;
  for (Vertex x = 0; x < g.order(); ++x) {
    bool any_at_two = false;
    for (Vertex z = 0; z < g.order(); ++z) {
      const int dz = m.at(x, z);
      if (dz != 2 && dz != 3) continue;
      any_at_two |= dz == 2;
      bool has_further = false;
      g.neighbors(z).for_each([&](Vertex w) { has_further |= m.at(x, w) == dz + 1; });
      if (!has_further) (dz == 2 ? cond_a : cond_b) = false;
    }
    second_shell_nonempty &= any_at_two;
  }
  if (!second_shell_nonempty) v.failed_hypotheses.push_back("X_2(x) non-empty for every x (graph is not complete)");
  if (!cond_a) v.failed_hypotheses.push_back("every vertex at distance 2 has a neighbour at distance 3");
  if (!cond_b) v.failed_hypotheses.push_back("every vertex at distance 3 has a neighbour at distance 4");
  return finish(std::move(v));
}

CriterionVerdict check_drg(const Graph& g) {
  CriterionVerdict v;
  v.id = "distance_regular";
  v.array = intersection_array(g);
  if (!v.array) {
    v.failed_hypotheses.push_back("connected distance-regular");
    return finish(std::move(v));
  }
  const auto& a = *v.array;
  if (a.diameter < 4) {
    v.failed_hypotheses.push_back("diameter d >= 4");
    return finish(std::move(v));
  }
  if (!(a.b[0] > a.b[1] + 1)) v.failed_hypotheses.push_back("b_0 > b_1 + 1");
  if (a.b[2] < 1) v.failed_hypotheses.push_back("b_2 >= 1");
  if (a.b[3] < 1) v.failed_hypotheses.push_back("b_3 >= 1");
  return finish(std::move(v));
}

CriterionVerdict check_common_neighbor_separation(const Graph& g) {
  CriterionVerdict v;
  v.id = "common_neighbor_separation";
  if (g.order() < 2) v.failed_hypotheses.push_back("non-trivial");
  const bool connected = is_connected(g);
  if (!connected) v.failed_hypotheses.push_back("connected");
  if (!is_twin_free(g)) v.failed_hypotheses.push_back("twin-free");
  if (!every_edge_on_triangle(g)) v.failed_hypotheses.push_back("every edge lies on a triangle");
  if (connected) {
    const auto m = metric(g);
    std::set<std::size_t> adjacent, distance_two;
    for (Vertex x = 0; x < g.order(); ++x)
      for (Vertex y = x + 1; y < g.order(); ++y) {
        if (m.at(x, y) == 1) adjacent.insert(common_neighbor_count(g, x, y));
        if (m.at(x, y) == 2) distance_two.insert(common_neighbor_count(g, x, y));
      }
    std::vector<std::size_t> shared;
    std::set_intersection(adjacent.begin(), adjacent.end(), distance_two.begin(), distance_two.end(),
                          std::back_inserter(shared));
    if (!shared.empty())
      v.failed_hypotheses.push_back("common-neighbour counts of adjacent and distance-2 pairs are disjoint (shared: " +
                                    std::to_string(shared.front()) + ")");
  }
  return finish(std::move(v));
}

CriterionVerdict check_srg_surowski(const Graph& g) {
  CriterionVerdict v;
  v.id = "srg_surowski";
  v.srg = srg_params(g);
  if (!v.srg) {
    v.failed_hypotheses.push_back("strongly regular");
    return finish(std::move(v));
  }
  const auto& p = *v.srg;
  if (!(p.k > p.mu)) v.failed_hypotheses.push_back("k > mu");
  if (p.mu == p.lambda) v.failed_hypotheses.push_back("mu != lambda");
  if (p.lambda < 1) v.failed_hypotheses.push_back("lambda >= 1");
  v = finish(std::move(v));
  if (v.applies && !check_common_neighbor_separation(g).applies)
    throw SoundnessError("srg_surowski applies but common_neighbor_separation does not");
  return v;
}

CriterionVerdict check_triangle_free_diam2(const Graph& g) {
  CriterionVerdict v;
  v.id = "triangle_free_diameter2";
  auto d = diameter(g);
  if (!d) v.failed_hypotheses.push_back("connected");
  if (is_bipartite(g)) v.failed_hypotheses.push_back("non-bipartite");
  if (!is_twin_free(g)) v.failed_hypotheses.push_back("twin-free");
  if (!is_triangle_free(g)) v.failed_hypotheses.push_back("triangle-free");
  if (d && *d != 2) v.failed_hypotheses.push_back("diameter 2");
  return finish(std::move(v));
}

CriterionVerdict check_srg_lambda0(const Graph& g) {
  CriterionVerdict v;
  v.id = "srg_lambda0";
  v.srg = srg_params(g);
  if (!v.srg) {
    v.failed_hypotheses.push_back("strongly regular");
    return finish(std::move(v));
  }
  if (!(v.srg->k > v.srg->mu)) v.failed_hypotheses.push_back("k > mu");
  if (v.srg->lambda != 0) v.failed_hypotheses.push_back("lambda = 0");
  return finish(std::move(v));
}

CriterionVerdict check_srg_necessary(const Graph& g) {
  CriterionVerdict v;
  v.id = "srg_necessary";
  v.srg = srg_params(g);
  if (!v.srg) {
    v.failed_hypotheses.push_back("strongly regular");
    return finish(std::move(v));
  }
  v.applies = true;
  v.implied = Implication::constraint;
  v.constraint = "nontrivially unstable => lambda = mu > 0";
  v.constraint_holds = v.srg->lambda == v.srg->mu && v.srg->mu > 0;
  return v;
}

SecondShell second_shell_split(const Graph& g, Vertex x) {
  const auto dp = distance_partition(g, x);
  SecondShell out;
  for (Vertex z : dp.layer(2)) {
    bool inner = false;
    g.neighbors(z).for_each([&](Vertex w) { inner |= dp.distance[w] == 2; });
    (inner ? out.s : out.complement).push_back(z);
  }
  return out;
}

CriteriaSummary criteria_summary(const Graph& g) {
  CriteriaSummary s;
  s.verdicts.push_back(check_surowski_fixed(g));
  s.verdicts.push_back(check_drg(g));
  s.verdicts.push_back(check_common_neighbor_separation(g));
  s.verdicts.push_back(check_srg_surowski(g));
  s.verdicts.push_back(check_triangle_free_diam2(g));
  s.verdicts.push_back(check_srg_lambda0(g));
  s.verdicts.push_back(check_srg_necessary(g));
  s.report = stability_report(g);
  for (const auto& v : s.verdicts) {
    if (v.implied == Implication::stable && !s.report.stable)
      throw SoundnessError("criterion " + v.id + " implies stability but |Aut(BX)| = " + s.report.aut_bx_order.str() +
                           " exceeds 2|Aut(X)| = " + BigInt(2 * s.report.aut_x_order).str());
    if (v.implied == Implication::constraint && v.constraint_holds == false &&
        s.report.classification == Classification::nontrivially_unstable)
      throw SoundnessError("criterion " + v.id + ": non-trivially unstable SRG violates " + v.constraint);
  }
  return s;
}

std::string to_string(Implication i) {
  switch (i) {
    case Implication::stable: return "stable";
    case Implication::none: return "none";
    case Implication::constraint: return "constraint";
  }
  return "?";
}

nlohmann::json to_json(const CriterionVerdict& v) {
  nlohmann::json j = {
      {"id", v.id},
      {"applies", v.applies},
      {"failed_hypotheses", v.failed_hypotheses},
      {"implied", to_string(v.implied)},
  };
  if (v.implied == Implication::constraint) {
    j["constraint"] = v.constraint;
    if (v.constraint_holds) j["constraint_holds"] = *v.constraint_holds;
  }
  if (v.srg) j["srg"] = {{"n", v.srg->n}, {"k", v.srg->k}, {"lambda", v.srg->lambda}, {"mu", v.srg->mu}};
  if (v.array) j["intersection_array"] = {{"b", v.array->b}, {"c", v.array->c}, {"d", v.array->diameter}};
  return j;
}

nlohmann::json to_json(const std::vector<CriterionVerdict>& vs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : vs) arr.push_back(to_json(v));
  return arr;
}

}  // namespace dcstab
