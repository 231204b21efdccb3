#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grr/group_table.hpp"
#include "grr/perm.hpp"

namespace grr {

/// Cells of a partition of the points, as masks.
using Partition = std::vector<Mask>;

/// Right regular representation x -> x*g, generated by the table generators.
PermGroup regular_rep(const GroupTable& g);

/// Right translation by one element, as a permutation.
Permutation translation(const GroupTable& g, int elem);

/// Orbits ordered by least point.
Partition orbits(const PermGroup& g);
Partition orbits_of(int degree, const std::vector<Permutation>& gens);

/// True iff every generator maps every part onto a part. Throws on an
/// intransitive group or when `parts` is not a partition of the points.
bool blocks_check(const PermGroup& g, const Partition& parts);

/// Smallest block system in which 0 and p share a block.
Partition minimal_block_system(const PermGroup& g, int p);

/// Throws on an intransitive group.
bool is_primitive(const PermGroup& g);

/// Largest normal subgroup of g inside r_sub. Throws unless r_sub <= g.
PermGroup core_of(const PermGroup& g, const PermGroup& r_sub);

/// Whether every generator of g normalizes l.
bool is_normal_in(const PermGroup& g, const PermGroup& l);

/// Smallest normal subgroup of g containing l.
PermGroup normal_closure(const PermGroup& g, const PermGroup& l);

struct Maximality {
  bool maximal = false;
  /// r_sub == g: reported maximal by convention.
  bool degenerate = false;
};

/// Tests <r_sub, x> == g for one x per double coset r_sub x r_sub.
/// Throws unless r_sub <= g and |g| <= 10^5.
Maximality is_maximal_subgroup(const PermGroup& g, const PermGroup& r_sub);

/// x -> x^-1.
Permutation inversion_perm(const GroupTable& g);

/// Number of orbits of <g1, iota>.
int joint_orbit_count(const PermGroup& g1, const Permutation& iota);

struct DichotomyReport {
  bool maximal = false;
  bool degenerate = false;
  bool l_normal = false;
  Mask orbit_of_identity = 0;
  bool orbit_is_subgroup = false;
  bool orbit_is_normal = false;
  bool l_in_r = false;
  bool orbits_stabilized = false;
  /// "L <= R", "orbits stabilized", "orbit not normal" or
  /// "precondition-failed".
  std::string branch;
  /// The checked conclusion; false only on a genuine counterexample.
  bool holds = false;
};

/// For R < G with R maximal and L normal in G: the L-orbit of 0 is a subgroup
/// of R, and when it is normal either L <= R or G_1 fixes every L-orbit.
/// Preconditions are checked and reported; the conclusion is computed
/// regardless. `known` skips recomputing the maximality of R in g.
DichotomyReport normal_orbit_dichotomy_check(const PermGroup& g, const GroupTable& table,
                                             const PermGroup& l_sub,
                                             std::optional<Maximality> known = std::nullopt);

}  // namespace grr
