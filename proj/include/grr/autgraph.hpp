#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grr/cayley.hpp"

namespace grr {

struct AutResult {
  PermGroup group;
  /// "refined-backtracking" or "brute-force".
  std::string method;
  double elapsed_ms = 0;
};

/// Full automorphism group of a digraph, optionally preserving a vertex
/// colouring. Individualization-refinement with first-path orbit pruning;
/// every generator is re-verified on all arcs.
AutResult automorphism_group(const Digraph& d, const std::vector<int>* colors = nullptr);
AutResult automorphism_group(const CayleyDigraph& d);

/// Reference implementation over all n! permutations, n <= 8.
AutResult brute_force_automorphisms(const Digraph& d, const std::vector<int>* colors = nullptr);

/// Whether the refinement with vertex 0 individualized is already discrete,
/// which proves the stabilizer of 0 trivial.
bool stabilizer_trivially_discrete(const Digraph& d);

bool is_drr(const GroupTable& g, Mask s);
bool is_grr(const GroupTable& g, Mask s);

/// R is normal in Aut(Cay(R, S)).
bool is_normal_cayley(const GroupTable& g, Mask s);
/// The same test against an already computed automorphism group.
bool regular_is_normal_in(const GroupTable& g, const PermGroup& aut);

/// Some non-identity automorphism fixes vertex 0, fixes every N-coset
/// setwise and normalizes the right regular copy of N. Throws unless N is a
/// nontrivial proper normal subgroup.
bool stabilized_orbit_predicate(const GroupTable& g, Mask s, const Subgroup& n);

/// Lexicographically least adjacency matrix over all labelings reachable in
/// the refinement tree; equal for isomorphic digraphs. n <= 10.
std::vector<Mask> canonical_form(const Digraph& d);

}  // namespace grr
