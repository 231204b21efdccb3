#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grr/perm.hpp"
#include "grr/subgroup.hpp"

namespace grr {

/// One orbit of H = G_1 K / K on R/K.
struct HOrbit {
  Mask points = 0;    // quotient elements
  Mask preimage = 0;  // union of the K-cosets over those points
  std::vector<Mask> cells;  // the K-cosets, ordered by least element
  bool inverse_fixed = false;  // closed under inversion in R/K
};

/// A transitive overgroup G of the right regular representation of R, with
/// the core K of R in G and the action of the point stabilizer on R/K.
struct OvergroupScenario {
  const GroupTable* group = nullptr;
  std::string label;
  PermGroup overgroup;
  PermGroup core;
  Mask core_mask = 0;
  Quotient quotient;
  std::vector<HOrbit> h_orbits;
  int kappa = 0;         // orbits of <H, inversion> on R/K
  int joint_orbits = 0;  // orbits of <G_1, inversion> on R
  bool transitive = false;
  bool proper = false;
  /// Computed only when |G| <= 10^5.
  std::optional<bool> r_maximal;
  /// R/K is neither abelian of exponent > 2 nor generalized dicyclic.
  bool quotient_grr_eligible = false;
  /// R itself is neither abelian of exponent > 2 nor generalized dicyclic.
  bool group_grr_eligible = false;
  /// H acts trivially on R/K (includes K = R).
  bool degenerate = false;
};

/// Throws unless g contains the regular representation of `table`.
OvergroupScenario make_scenario(const GroupTable& table, const PermGroup& g, std::string label);

}  // namespace grr
