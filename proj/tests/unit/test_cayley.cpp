#include <doctest.h>

#include "grr/cayley.hpp"
#include "helpers.hpp"

using namespace grr;

TEST_CASE("Cayley digraph construction") {
  const GroupTable c4 = load_group("cyclic:4");
  const CayleyDigraph empty = build_cayley(c4, 0);
  for (Mask row : empty.graph.out) CHECK(row == 0);
  CHECK(empty.is_graph);

  const CayleyDigraph full = build_cayley(c4, c4.all());
  for (Mask row : full.graph.out) CHECK(row == c4.all());
  CHECK(full.loops_present);

  const CayleyDigraph cyc = build_cayley(c4, bit(1));
  for (int u = 0; u < 4; ++u) CHECK(cyc.graph.out[u] == bit((u + 1) % 4));
  CHECK_FALSE(cyc.is_graph);
  CHECK_FALSE(cyc.graph.symmetric());
}

TEST_CASE("neighbourhoods are right translates of S") {
  const GroupTable g = load_group("sym:3");
  const Mask s = bit(1) | bit(2) | bit(4);
  const CayleyDigraph c = build_cayley(g, s);
  for (int u = 0; u < 6; ++u) {
    Mask expect = 0;
    for_each_bit(s, [&](int x) { expect |= bit(g.mul(x, u)); });
    CHECK(c.graph.out[u] == expect);
    CHECK(popcount(c.graph.out[u]) == 3);
  }
  CHECK(c.is_graph == (inverse_mask(g, s) == s));
}

TEST_CASE("equitable partitions") {
  const GroupTable c6 = load_group("cyclic:6");
  const CayleyDigraph c = build_cayley(c6, bit(1) | bit(5));
  Partition singletons;
  for (int x = 0; x < 6; ++x) singletons.push_back(bit(x));
  const EquitableResult s = is_equitable(c.graph, singletons);
  CHECK(s.equitable);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(s.matrix[i][j] == (c.graph.arc(i, j) ? 1 : 0));

  const EquitableResult one = is_equitable(c.graph, {c6.all()});
  CHECK(one.equitable);
  CHECK(one.matrix[0][0] == 2);

  // Orbits of rotation by 2.
  CHECK(is_equitable(c.graph, {0b010101, 0b101010}).equitable);
  const EquitableResult bad = is_equitable(c.graph, {0b000011, 0b111100});
  CHECK_FALSE(bad.equitable);
  CHECK(bad.cell >= 0);
  CHECK_THROWS_AS(is_equitable(c.graph, {0b1, 0b11}), Error);
}

TEST_CASE("odd quotient graphs") {
  const GroupTable c4 = load_group("cyclic:4");
  const CayleyDigraph sq = build_cayley(c4, bit(1) | bit(3));
  const OddQuotientGraph whole = odd_quotient(sq, {c4.all()});
  CHECK(whole.edges.size() == 1);
  CHECK_FALSE(whole.edges[0][0]);

  const Partition cosets{0b0101, 0b1010};
  const OddQuotientGraph q = odd_quotient(sq, cosets);
  CHECK(q.e[0][1] == 2);
  CHECK_FALSE(q.edges[0][1]);

  const OddQuotientGraph m = odd_quotient(build_cayley(c4, bit(2)), cosets);
  CHECK(m.e[0][0] == 1);
  CHECK(m.e[0][1] == 0);
  CHECK_FALSE(m.edges[0][1]);

  const GroupTable c6 = load_group("cyclic:6");
  const OddQuotientGraph odd = odd_quotient(build_cayley(c6, bit(3)), {0b010101, 0b101010});
  CHECK(odd.e[0][1] == 1);
  CHECK(odd.edges[0][1]);
  CHECK_THROWS_AS(odd_quotient(build_cayley(c4, bit(1)), cosets), Error);
}

TEST_CASE("parity profiles") {
  const GroupTable c6 = load_group("cyclic:6");
  const Subgroup k(c6, bit(0) | bit(3));
  CHECK(parity_profile(c6, 0, k) == std::vector<int>{0, 0, 0});
  CHECK(parity_profile(c6, bit(1) | bit(4), k) == std::vector<int>{0, 0, 0});
  CHECK(parity_profile(c6, bit(1) | bit(4) | bit(5), k) == std::vector<int>{0, 0, 1});
  const GroupTable s3 = load_group("sym:3");
  CHECK_THROWS_AS(parity_profile(s3, 0, testing::find_subgroup(s3, 2, false)), Error);
}

TEST_CASE("adjacency export") {
  const GroupTable c4 = load_group("cyclic:4");
  CHECK(export_adjacency(build_cayley(c4, bit(1) | bit(3)).graph) == "0: 1 3\n1: 0 2\n2: 1 3\n3: 0 2\n");
  CHECK(export_adjacency(build_cayley(c4, 0).graph) == "0:\n1:\n2:\n3:\n");
}
