#include "dcstab/stability.hpp"

#include <sstream>

#include "dcstab/canon.hpp"
#include "dcstab/double_cover.hpp"
#include "dcstab/errors.hpp"

namespace dcstab {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::stable: return "stable";
    case Classification::trivially_unstable: return "trivially_unstable";
    case Classification::nontrivially_unstable: return "nontrivially_unstable";
  }
  return "?";
}

std::string to_string(TrivialReason r) {
  switch (r) {
    case TrivialReason::disconnected: return "disconnected";
    case TrivialReason::bipartite_with_nontrivial_aut: return "bipartite_with_nontrivial_aut";
    case TrivialReason::has_twins: return "has_twins";
  }
  return "?";
}

namespace {

BigInt cover_automorphism_order(const DoubleCover& d, bool layer_partition) {
  const std::size_t n = d.base_order();
  if (layer_partition && n > 0 && is_connected(d.base) && !is_bipartite(d.base)) {
    OrderedPartition layers;
    layers.cells.resize(2);
    for (Vertex x = 0; x < n; ++x) {
      layers.cells[0].push_back(d.vertex(x, 0));
      layers.cells[1].push_back(d.vertex(x, 1));
    }
    auto gens = canonical_form(d.cover, layers).aut_generators;
    gens.push_back(tau(d));
    return PermGroup(d.cover.order(), std::move(gens)).order();
  }
  return automorphism_group(d.cover).order();
}

}  // namespace

StabilityReport stability_report(const Graph& g, const StabilityOptions& options) {
  StabilityReport r;
  r.n = g.order();
  const DoubleCover d = double_cover(g);
  r.aut_x_order = automorphism_group(g).order();
  r.aut_bx_order = cover_automorphism_order(d, options.layer_partition);
  const BigInt expected = 2 * r.aut_x_order;
  if (r.aut_bx_order % expected != 0)
    throw SoundnessError("stability_report: 2|Aut(X)| does not divide |Aut(BX)|");
  r.instability_index = r.aut_bx_order / expected;
  r.stable = r.instability_index == 1;

  const bool connected = is_connected(g);
  const bool bipartite = is_bipartite(g);
  const bool twin_free = is_twin_free(g);
  if (r.stable) {
    r.classification = Classification::stable;
  } else if (connected && !bipartite && twin_free) {
    r.classification = Classification::nontrivially_unstable;
  } else {
    r.classification = Classification::trivially_unstable;
    if (!connected) r.reasons.push_back(TrivialReason::disconnected);
    if (bipartite && r.aut_x_order > 1) r.reasons.push_back(TrivialReason::bipartite_with_nontrivial_aut);
    if (!twin_free) r.reasons.push_back(TrivialReason::has_twins);
  }
  return r;
}

nlohmann::json to_json(const StabilityReport& r) {
  nlohmann::json reasons = nlohmann::json::array();
  for (auto reason : r.reasons) reasons.push_back(to_string(reason));
  return {
      {"n", r.n},
      {"aut_x_order", r.aut_x_order.str()},
      {"aut_bx_order", r.aut_bx_order.str()},
      {"stable", r.stable},
      {"index", r.instability_index.str()},
      {"classification", to_string(r.classification)},
      {"reasons", reasons},
  };
}

std::string to_text(const StabilityReport& r) {
  std::ostringstream os;
  os << "order            " << r.n << '\n'
     << "|Aut(X)|         " << r.aut_x_order << '\n'
     << "|Aut(BX)|        " << r.aut_bx_order << '\n'
     << "instability idx  " << r.instability_index << '\n'
     << "classification   " << to_string(r.classification);
  if (!r.reasons.empty()) {
    os << " (";
    for (std::size_t i = 0; i < r.reasons.size(); ++i) os << (i ? ", " : "") << to_string(r.reasons[i]);
    os << ')';
  }
  os << '\n';
  return os.str();
}

}  // namespace dcstab
