#pragma once

#include <optional>
#include <vector>

#include "grr/element_set.hpp"

namespace grr {

/// A subgroup of a GroupTable, stored by its member mask.
class Subgroup {
 public:
  /// Throws unless `members` is a subgroup of `owner`.
  Subgroup(const GroupTable& owner, Mask members);

  static Subgroup trivial(const GroupTable& g) { return {g, 1}; }
  static Subgroup whole(const GroupTable& g) { return {g, g.all()}; }
  static Subgroup generated_by(const GroupTable& g, Mask gens) {
    return {g, subgroup_closure(g, gens | 1)};
  }

  const GroupTable& owner() const { return *owner_; }
  ElementSet members() const { return {*owner_, members_}; }
  Mask mask() const { return members_; }
  int order() const { return popcount(members_); }
  int index() const { return owner_->order() / order(); }
  bool is_normal() const;
  bool contains(int x) const { return (members_ >> x) & 1; }

  /// Right coset Qy.
  Mask right_coset(int y) const;
  /// Left coset yQ.
  Mask left_coset(int y) const;
  /// Right cosets ordered by least element.
  std::vector<Mask> right_cosets() const;

  bool operator==(const Subgroup& o) const { return owner_ == o.owner_ && members_ == o.members_; }

 private:
  const GroupTable* owner_;
  Mask members_;
};

/// Every subgroup (optionally only those of index at most `max_index`),
/// ordered by size then mask. Exhaustive closure enumeration seeded from the
/// cyclic subgroups; the whole group is always present when it qualifies.
std::vector<Subgroup> subgroups(const GroupTable& g, std::optional<int> max_index = std::nullopt);

/// Index-2 subgroups, found as kernels of every homomorphism onto C2.
std::vector<Subgroup> index_two_subgroups(const GroupTable& g);

struct Quotient {
  GroupTable table;
  /// projection[x] = index of the coset xK, cosets ordered by least element.
  std::vector<int> projection;
  std::vector<Mask> cosets;
};

/// R/K for a normal subgroup K. The projection is checked to be a
/// homomorphism on every pair.
Quotient quotient(const GroupTable& g, const Subgroup& k);

}  // namespace grr
