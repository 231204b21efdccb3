#pragma once

#include <string>
#include <vector>

#include "grr/group_table.hpp"

namespace grr {

/// An exact half-integer, stored as twice its value.
struct HalfInt {
  long long twice = 0;

  double value() const { return static_cast<double>(twice) / 2.0; }
  bool operator==(const HalfInt&) const = default;
  auto operator<=>(const HalfInt&) const = default;
};

std::string to_string(HalfInt h);

/// A subset of a group's elements.
class ElementSet {
 public:
  ElementSet(const GroupTable& owner, Mask bits) : owner_(&owner), bits_(bits & owner.all()) {}

  static ElementSet empty(const GroupTable& g) { return {g, 0}; }
  static ElementSet full(const GroupTable& g) { return {g, g.all()}; }
  static ElementSet of(const GroupTable& g, std::initializer_list<int> elems);

  const GroupTable& owner() const { return *owner_; }
  Mask bits() const { return bits_; }

  int size() const { return popcount(bits_); }
  bool contains(int x) const { return (bits_ >> x) & 1; }
  bool empty() const { return bits_ == 0; }

  /// |I(X)|: members of order at most 2.
  int involution_count() const;
  /// c(X) = (|X| + |I(X)|) / 2.
  HalfInt c_value() const { return {size() + involution_count()}; }

  ElementSet inverse() const;
  bool inverse_closed() const { return inverse().bits_ == bits_; }

  std::vector<int> elements() const;

  ElementSet operator&(const ElementSet& o) const { return {*owner_, bits_ & o.bits_}; }
  ElementSet operator|(const ElementSet& o) const { return {*owner_, bits_ | o.bits_}; }
  ElementSet operator-(const ElementSet& o) const { return {*owner_, bits_ & ~o.bits_}; }
  bool operator==(const ElementSet& o) const { return owner_ == o.owner_ && bits_ == o.bits_; }

 private:
  const GroupTable* owner_;
  Mask bits_;
};

/// Inverse of every element of `m`.
Mask inverse_mask(const GroupTable& g, Mask m);

/// Members of order at most 2.
Mask involution_mask(const GroupTable& g, Mask m);

/// The free choices of an inverse-closed set: one singleton per element of
/// order at most 2 and one pair {y, y^-1} otherwise, ordered by least member.
/// There are exactly c(X) of them.
std::vector<Mask> inverse_closed_atoms(const GroupTable& g, Mask x);

std::string format_elements(Mask m);

}  // namespace grr
