#pragma once

#include <string>
#include <vector>

#include "grr/perm_algorithms.hpp"
#include "grr/subgroup.hpp"

namespace grr {

/// A digraph on at most 64 vertices as out- and in-neighbour bit rows.
struct Digraph {
  int n = 0;
  std::vector<Mask> out;
  std::vector<Mask> in;

  Digraph() = default;
  /// Builds the in-rows from `out`.
  explicit Digraph(std::vector<Mask> out_rows);

  bool arc(int u, int v) const { return (out[u] >> v) & 1; }
  bool symmetric() const { return out == in; }
  bool operator==(const Digraph& o) const { return out == o.out; }
};

/// Cay(R, S): arc (u, v) iff v u^-1 in S.
struct CayleyDigraph {
  const GroupTable* group = nullptr;
  Mask connection = 0;
  Digraph graph;
  bool is_graph = false;
  bool loops_present = false;
};

CayleyDigraph build_cayley(const GroupTable& g, Mask s);

struct EquitableResult {
  bool equitable = false;
  /// matrix[i][j] = out-neighbours in cell j of any vertex of cell i.
  std::vector<std::vector<int>> matrix;
  /// On failure: two vertices of cell `cell` disagreeing on `target`.
  int cell = -1, target = -1, u = -1, v = -1;
};

/// Throws unless `parts` partitions the vertices.
EquitableResult is_equitable(const Digraph& d, const Partition& parts);

struct OddQuotientGraph {
  Partition parts;
  std::vector<std::vector<int>> e;
  /// Edge between distinct parts iff e is odd; the diagonal is always false.
  std::vector<std::vector<bool>> edges;
};

/// Throws unless d is a graph and `parts` is equitable with equal-size cells.
OddQuotientGraph odd_quotient(const CayleyDigraph& d, const Partition& parts);

/// Parity of |S cap xK| for every coset of the normal subgroup K, cosets
/// ordered by least element. Throws unless K is normal.
std::vector<int> parity_profile(const GroupTable& g, Mask s, const Subgroup& k);

/// One line per vertex, "u: v1 v2 ...", out-neighbours ascending.
std::string export_adjacency(const Digraph& d);

}  // namespace grr
