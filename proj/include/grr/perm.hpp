#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "grr/types.hpp"

namespace grr {

/// A bijection of the points 0..n-1, n <= 64. Composition p * q applies p
/// first (right action), matching the right regular representation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::span<const int> images);

  static Permutation identity(int n);
  /// Parses a one-line image array such as "0 2 1 3".
  static Permutation parse(const std::string& line);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  bool is_identity() const;
  Permutation inverse() const;
  /// Image of a point set.
  Mask apply(Mask m) const;

  Permutation operator*(const Permutation& q) const;
  bool operator==(const Permutation& o) const = default;
  auto operator<=>(const Permutation& o) const = default;

  /// One-line image array, "0 2 1 3".
  std::string to_line() const;
  /// Cycle notation with fixed points omitted, "(1 3)".
  std::string to_cycles() const;
  std::vector<int> images() const { return {img_.begin(), img_.end()}; }

 private:
  std::vector<std::uint8_t> img_;
};

/// One level of a stabilizer chain: the orbit of `base` under `gens` (all of
/// which fix the earlier base points) with a transversal.
struct ChainLevel {
  int base = 0;
  std::vector<Permutation> gens;
  std::vector<int> orbit;
  std::vector<int> slot;  // point -> index into orbit/transversal, -1 if absent
  std::vector<Permutation> transversal;  // base^transversal[k] == orbit[k]
  std::vector<Permutation> transversal_inv;
};

/// A permutation group given by generators, with a deterministic
/// Schreier-Sims stabilizer chain built eagerly on construction. Base points
/// are chosen as the least moved point at each level.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators);

  static PermGroup trivial(int degree) { return PermGroup(degree, {}); }
  static PermGroup symmetric(int degree);

  int degree() const { return degree_; }
  /// Non-redundant generators: each was not in the group generated by the
  /// ones before it.
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<ChainLevel>& chain() const { return levels_; }
  std::vector<int> base() const;

  BigInt order() const;
  /// Order as an integer, or -1 when it exceeds `cap`.
  long long order_if_at_most(long long cap) const;
  bool contains(const Permutation& p) const;
  bool is_trivial() const { return levels_.empty(); }

  /// All elements; throws when the order exceeds `cap`.
  std::vector<Permutation> elements(long long cap = 100000) const;
  /// Position of a member in the order produced by elements().
  long long rank(const Permutation& p) const;
  Permutation unrank(long long k) const;
  /// Uniform random element.
  Permutation random_element(std::mt19937_64& rng) const;

  PermGroup point_stabilizer(int p) const;
  /// Orbit of p in BFS order.
  std::vector<int> orbit(int p) const;
  bool is_transitive() const;

  bool is_subgroup_of(const PermGroup& other) const;
  bool same_group(const PermGroup& other) const;

 private:
  struct Sift {
    std::size_t level;
    Permutation residue;
  };
  Sift sift(Permutation g, std::size_t from) const;
  void add_generator(const Permutation& g);
  void rebuild_level(std::size_t i);
  void complete();

  int degree_;
  std::vector<Permutation> gens_;
  std::vector<ChainLevel> levels_;
};

/// "0 2 1 3" lines, one per generator.
std::string serialize(const PermGroup& g);
PermGroup parse_perm_group(int degree, const std::string& text);

}  // namespace grr
