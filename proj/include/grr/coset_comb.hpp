#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grr/double_coset.hpp"
#include "grr/dyadic.hpp"
#include "grr/scenario.hpp"

namespace grr {

/// Largest atom count accepted by the exhaustive enumerators.
inline constexpr int kMaxEnumerationAtoms = 24;

/// Calls f(mask) for the union of atoms selected by every index in
/// [begin, end), in increasing index order. Index bit i selects atoms[i].
template <typename F>
void for_each_atom_subset(const std::vector<Mask>& atoms, std::uint64_t begin, std::uint64_t end, F&& f) {
  std::vector<Mask> prefix(atoms.size());
  Mask acc = 0, m = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    acc ^= atoms[i];
    prefix[i] = acc;
    if ((begin >> i) & 1) m |= atoms[i];
  }
  for (std::uint64_t i = begin; i < end; ++i) {
    if (i != begin) m ^= prefix[std::countr_zero(i)];
    f(m);
  }
}

/// Calls f for each of the 2^c(X) inverse-closed subsets of X. Throws if X
/// is not inverse-closed or c(X) exceeds the enumeration cap.
template <typename F>
void for_each_inverse_closed(const GroupTable& g, Mask x, F&& f) {
  const std::vector<Mask> atoms = inverse_closed_atoms(g, x);
  if (static_cast<int>(atoms.size()) > kMaxEnumerationAtoms)
    throw Error("refusing to enumerate 2^" + std::to_string(atoms.size()) + " inverse-closed sets");
  for_each_atom_subset(atoms, 0, std::uint64_t{1} << atoms.size(), f);
}

/// Every inverse-closed subset of X, in atom-index binary counting order.
std::vector<Mask> enumerate_inverse_closed(const GroupTable& g, Mask x);

/// n_k, the number of inverse-closed k-subsets of X, for k = 0..|X|.
std::vector<long long> inverse_closed_size_counts(const GroupTable& g, Mask x);

struct SizeCount {
  long long count = 0;
  HalfInt c;
  /// count <= 2^(c(X) - 1)
  Verdict verdict;
};

/// Throws on an empty or non-inverse-closed X.
SizeCount count_inverse_closed_of_size(const GroupTable& g, Mask x, int k);

/// A union of equal-size cells against which evenness is required.
struct EvenBlock {
  std::string label;
  std::vector<Mask> cells;
};

struct EvenFamilySpec {
  std::vector<EvenBlock> blocks;
  /// Throws unless cells are disjoint, equal-sized within a block, and
  /// together cover the group.
  void validate(const GroupTable& g) const;
};

/// Blocks = double cosets of Q, cells = their right Q-cosets.
EvenFamilySpec double_coset_family(const GroupTable& g, const Subgroup& q);

bool intersects_evenly(Mask s, const std::vector<Mask>& cells);
bool even_intersect_check(Mask s, const EvenFamilySpec& spec);

struct OrderingResult {
  /// order[p] = index into the class's right_cosets of the coset at
  /// position p (0-based).
  std::vector<int> order;
  /// witnesses[i - 2] for 1-based positions i = 2..floor(b/2)+1.
  std::vector<int> witnesses;
};

/// The inductive swap construction: starting from the stored coset order,
/// for l = 2..floor(b/2) swap position l+1 with the smallest s in l+1..2l
/// whose coset meets the inverse of the cosets from position l+1 on. The
/// result is re-verified; a missing s or failed check raises ProofViolation.
OrderingResult construct_ordering(const GroupTable& g, const DoubleCosetClass& cls);

/// Position i coset meets the inverse of positions i..b, for every
/// i = 2..floor(b/2)+1.
bool verify_ordering(const GroupTable& g, const DoubleCosetClass& cls, const std::vector<int>& order);

/// Entry k-1 tells whether positions k+1..2k meet the inverses of positions
/// k+1..b, for k = 1..floor(b/2).
std::vector<bool> check_2k_property(const GroupTable& g, const DoubleCosetClass& cls,
                                    const std::vector<int>& order);

/// Inverse-closed subsets of an inverse-closed class meeting its right
/// cosets evenly, against 2^(c - b/2 + 1/2).
Verdict count_M(const GroupTable& g, const DoubleCosetClass& cls);

struct NCount {
  Verdict verdict;  // against 2^(|QxQ| - b + 1)
  BigInt closed_form;
};

/// All subsets of a class meeting its right cosets evenly; exhaustive and
/// cross-checked against sum_k C(|Q|, k)^b.
NCount count_N(const GroupTable& g, const DoubleCosetClass& cls);

struct LSubgroupCount {
  BigInt count;
  /// against 2^(c(R) - |R:Q|/2 + l/2)
  Verdict general;
  /// against 2^(c(R) - |R:Q|/8); only for non-normal Q
  std::optional<Verdict> nonnormal;
  /// product of the per-class counts, cross-checked against `count`
  BigInt product;
};

/// Inverse-closed S meeting every double coset of Q evenly. Exhaustive.
LSubgroupCount count_L_subgroup(const GroupTable& g, const Subgroup& q);

struct OrbitCount {
  int orbit = 0;
  bool inverse_fixed = false;
  /// inverse-closed even subsets, against 2^(c(preimage) - c(orbit) + 1)
  std::optional<Verdict> inverse_closed;
  /// all even subsets, against 2^(|preimage| - |orbit| + 1)
  Verdict all;
};

struct LQuotientCount {
  BigInt count;
  /// against 2^(c(R) - c(R/K) + kappa)
  Verdict general;
  /// against 2^(c(R) - |R/K|/96); only for eligible, non-degenerate scenarios
  std::optional<Verdict> eligible;
  std::vector<OrbitCount> per_orbit;
};

/// Inverse-closed S meeting every H-orbit preimage evenly (cells = K-cosets).
LQuotientCount count_L_quotient(const OvergroupScenario& s);

/// Subsets of an m-set of the given size parity.
BigInt parity_subset_count(int m, bool odd);

}  // namespace grr
