#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcstab/graph.hpp"
#include "dcstab/perm_group.hpp"

namespace dcstab {

enum class Classification { stable, trivially_unstable, nontrivially_unstable };

enum class TrivialReason { disconnected, bipartite_with_nontrivial_aut, has_twins };

std::string to_string(Classification c);
std::string to_string(TrivialReason r);

struct StabilityReport {
  std::size_t n = 0;
  BigInt aut_x_order = 1;
  BigInt aut_bx_order = 2;
  bool stable = true;
  /// |Aut(BX)| / (2 |Aut(X)|); equals 1 exactly when stable.
  BigInt instability_index = 1;
  Classification classification = Classification::stable;
  /// Only populated for trivially unstable graphs; all applicable reasons.
  std::vector<TrivialReason> reasons;
};

struct StabilityOptions {
  /// Compute Aut(BX) with the two layers as an initial colouring and add
  /// tau afterwards. Only used when BX is connected.
  bool layer_partition = false;
};

StabilityReport stability_report(const Graph& g, const StabilityOptions& options = {});

/// Keys: n, aut_x_order, aut_bx_order, stable, index, classification,
/// reasons. Big integers are decimal strings.
nlohmann::json to_json(const StabilityReport& r);
std::string to_text(const StabilityReport& r);

}  // namespace dcstab
