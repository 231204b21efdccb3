#pragma once

#include <utility>
#include <vector>

#include "grr/subgroup.hpp"

namespace grr {

/// One double coset QxQ and its right Q-cosets.
struct DoubleCosetClass {
  Mask elements = 0;
  /// Right Q-cosets contained in the class, ordered by least element.
  std::vector<Mask> right_cosets;

  int b() const { return static_cast<int>(right_cosets.size()); }
  bool inverse_closed(const GroupTable& g) const { return inverse_mask(g, elements) == elements; }

  /// Lambda_i intersected with Lambda_j^-1, for the cosets in the given order.
  Mask intersection(const GroupTable& g, int i, int j) const {
    return right_cosets[i] & inverse_mask(g, right_cosets[j]);
  }
  /// The full b x b table of those intersections.
  std::vector<std::vector<Mask>> intersections(const GroupTable& g) const;
};

/// The partition of R into double cosets of Q.
struct DoubleCosetDecomposition {
  const GroupTable* owner = nullptr;
  Mask subgroup = 0;
  std::vector<DoubleCosetClass> classes;  // ordered by least element
  std::vector<int> self_paired;           // classes equal to their inverse
  std::vector<std::pair<int, int>> paired;  // (class, inverse class), first < second

  int ell() const { return static_cast<int>(classes.size()); }
};

DoubleCosetDecomposition double_cosets(const GroupTable& g, const Subgroup& q);

}  // namespace grr
