#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "grr/types.hpp"

namespace grr {

/// A finite group given by its multiplication table.
///
/// Element 0 is always the identity; construction renumbers to enforce it.
/// `mul(a, b)` is the product "a then b" (row element times column element).
class GroupTable {
 public:
  /// Validates `table` (row-major, order*order entries) and renumbers so the
  /// identity becomes element 0. Throws grr::Error naming the offending row,
  /// column or triple.
  GroupTable(std::string name, int order, const std::vector<int>& table);

  int order() const { return order_; }
  const std::string& name() const { return name_; }

  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return 0; }

  Mask all() const { return low_bits(order_); }

  /// Elements of order at most 2 (identity included).
  bool squares_to_identity(int x) const { return mul(x, x) == 0; }
  int element_order(int x) const;
  int exponent() const;
  bool is_abelian() const;

  /// Greedy generating set: repeatedly adds the smallest element outside the
  /// subgroup generated so far.
  const std::vector<int>& generators() const { return generators_; }

  /// The element x*g for every x, i.e. right translation by g.
  std::vector<int> right_translation(int g) const;

 private:
  std::string name_;
  int order_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> inv_;
  std::vector<int> generators_;
};

/// Smallest subgroup containing `seed` (as an element mask).
Mask subgroup_closure(const GroupTable& g, Mask seed);

/// Parses a group source: "builtin:<desc>", a bare builtin descriptor, or a
/// path to a .gtab file.
GroupTable load_group(std::string_view source);

/// Builtin families: cyclic:n, dihedral:n, dicyclic:n, quaternion, elem2:k,
/// sym:n, alt:n, product:A,B (split at the last top-level comma).
GroupTable builtin_group(std::string_view descriptor);

/// Parses .gtab text. `name` labels the result.
GroupTable parse_gtab(std::string_view text, std::string name);

/// Serializes in .gtab format.
std::string to_gtab(const GroupTable& g);

/// Direct product; element (a, b) has index a + |A| * b.
GroupTable direct_product(const GroupTable& a, const GroupTable& b, std::string name);

/// Every automorphism of the group, each as an element map x -> alpha(x).
/// The identity map comes first.
std::vector<std::vector<int>> table_automorphisms(const GroupTable& g);

}  // namespace grr
