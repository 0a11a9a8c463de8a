#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcstab/graph.hpp"
#include "dcstab/stability.hpp"

namespace dcstab {

struct SrgParams {
  std::size_t n = 0, k = 0, lambda = 0, mu = 0;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Distance-regular parameters {b_0..b_{d-1}; c_1..c_d}. c[0] holds c_1.
struct IntersectionArray {
  std::vector<std::size_t> b;
  std::vector<std::size_t> c;
  std::size_t diameter = 0;
  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

/// Parameters of a connected k-regular graph of diameter 2 with constant
/// common-neighbour counts on edges and on non-edges.
std::optional<SrgParams> srg_params(const Graph& g);
/// Present iff g is connected and distance-regular.
std::optional<IntersectionArray> intersection_array(const Graph& g);

enum class Implication { stable, none, constraint };

struct CriterionVerdict {
  std::string id;
  bool applies = false;
  std::vector<std::string> failed_hypotheses;
  Implication implied = Implication::none;
  std::string constraint;
  /// For the SRG necessary condition: whether lambda = mu > 0 holds.
  std::optional<bool> constraint_holds;
  std::optional<SrgParams> srg;
  std::optional<IntersectionArray> array;
};

// Each checker verifies the hypotheses of one sufficient stability
// condition. A verdict never claims instability.

/// Every edge on a triangle; for every x, each vertex at distance 2 has a
/// neighbour at distance 3 and each vertex at distance 3 has one at
/// distance 4. Complete graphs are reported as not applicable.
CriterionVerdict check_surowski_fixed(const Graph& g);
/// Distance-regular with d >= 4, b_0 > b_1 + 1 and b_2, b_3 >= 1.
CriterionVerdict check_drg(const Graph& g);
/// Twin-free, every edge on a triangle, and no common-neighbour count of an
/// adjacent pair equals that of a distance-2 pair.
CriterionVerdict check_common_neighbor_separation(const Graph& g);
/// (n,k,lambda,mu)-SRG with k > mu != lambda >= 1. Throws SoundnessError if
/// it applies while the common-neighbour separation check does not.
CriterionVerdict check_srg_surowski(const Graph& g);
/// Connected, non-bipartite, twin-free, triangle-free of diameter 2.
CriterionVerdict check_triangle_free_diam2(const Graph& g);
/// (n,k,0,mu)-SRG with k > mu.
CriterionVerdict check_srg_lambda0(const Graph& g);
/// For SRGs: non-trivially unstable implies lambda = mu > 0.
CriterionVerdict check_srg_necessary(const Graph& g);

struct SecondShell {
  /// Vertices at distance 2 from x having a neighbour at distance 2.
  std::vector<Vertex> s;
  std::vector<Vertex> complement;
};

SecondShell second_shell_split(const Graph& g, Vertex x);

struct CriteriaSummary {
  std::vector<CriterionVerdict> verdicts;
  StabilityReport report;
};

/// Runs every checker and cross-checks against the direct stability
/// computation. Throws SoundnessError on any disagreement.
CriteriaSummary criteria_summary(const Graph& g);

std::string to_string(Implication i);
nlohmann::json to_json(const CriterionVerdict& v);
nlohmann::json to_json(const std::vector<CriterionVerdict>& vs);

}  // namespace dcstab
