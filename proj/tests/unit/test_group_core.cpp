#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grr/classify.hpp"
#include "grr/double_coset.hpp"
#include "helpers.hpp"

using namespace grr;

TEST_CASE("builtin groups load with the expected shape") {
  const GroupTable c4 = load_group("builtin:cyclic:4");
  CHECK(c4.order() == 4);
  CHECK(c4.is_abelian());

  const GroupTable q8 = load_group("builtin:quaternion");
  CHECK(q8.order() == 8);
  CHECK_FALSE(q8.is_abelian());
  int involutions = 0;
  for (int x = 1; x < 8; ++x) involutions += q8.element_order(x) == 2;
  CHECK(involutions == 1);

  CHECK(load_group("product:cyclic:4,cyclic:2").order() == 8);
  CHECK(load_group("product:quaternion,elem2:1").order() == 16);
  CHECK(load_group("sym:4").order() == 24);
  CHECK(load_group("alt:4").order() == 12);
  CHECK(load_group("dicyclic:3").order() == 12);
}

TEST_CASE("identity is renumbered to element 0") {
  // Identity sits at index 2 in the source table.
  const GroupTable g = parse_gtab("3\n1 2 0\n2 0 1\n0 1 2\n", "shifted");
  CHECK(g.mul(0, 1) == 1);
  CHECK(g.mul(1, 0) == 1);
  CHECK(g.inv(0) == 0);
}

TEST_CASE("malformed tables are rejected with a location") {
  const std::string bad = "4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 1\n";
  CHECK_THROWS_WITH_AS(parse_gtab(bad, "bad"), "row 3 not a permutation", Error);
  CHECK_THROWS_AS(parse_gtab("2\n0 1\n1 1\n", "bad"), Error);
  CHECK_THROWS_AS(builtin_group("cyclic:65"), Error);
  CHECK_THROWS_AS(builtin_group("sym:5"), Error);
  CHECK_THROWS_AS(builtin_group("nonsense:3"), Error);
}

TEST_CASE("gtab round trip") {
  const GroupTable s3 = load_group("sym:3");
  const GroupTable back = parse_gtab(to_gtab(s3), "copy");
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(back.mul(a, b) == s3.mul(a, b));
}

TEST_CASE("classification of the excluded families") {
  CHECK(classify(load_group("cyclic:3")).abelian_exp_gt2);
  const Classification q = classify(load_group("quaternion"));
  CHECK(q.generalized_dicyclic);
  CHECK(q.hamiltonian_2group);
  const Classification e = classify(load_group("elem2:3"));
  CHECK(e.elementary_abelian_2);
  CHECK_FALSE(e.grr_family_excluded);
  CHECK(classify(load_group("dicyclic:3")).generalized_dicyclic);
  CHECK(classify(load_group("product:quaternion,elem2:1")).hamiltonian_2group);
  CHECK_FALSE(classify(load_group("dihedral:4")).grr_family_excluded);
  CHECK_FALSE(classify(load_group("sym:3")).grr_family_excluded);
}

TEST_CASE("involution fraction") {
  const auto e = involution_fraction_check(load_group("elem2:2"));
  CHECK(e.involutions == e.order);
  CHECK(e.is_ea2);
  const auto s = involution_fraction_check(load_group("sym:3"));
  CHECK(s.involutions == 4);
  CHECK(s.order == 6);
  CHECK_FALSE(s.must_be_ea2);
  const auto d = involution_fraction_check(load_group("dihedral:4"));
  CHECK(d.involutions == 6);
  CHECK_FALSE(d.must_be_ea2);
}

TEST_CASE("c values") {
  const GroupTable c4 = load_group("cyclic:4");
  CHECK(ElementSet::full(c4).c_value().twice == 6);
  CHECK(ElementSet::full(load_group("sym:3")).c_value().twice == 10);
  CHECK(ElementSet::full(load_group("elem2:3")).c_value().twice == 16);
  CHECK(inverse_closed_atoms(c4, c4.all()).size() == 3);
}

TEST_CASE("subgroup lattices") {
  const GroupTable c4g = load_group("cyclic:4");
  const auto c4 = subgroups(c4g);
  CHECK(c4.size() == 3);
  for (const auto& q : c4) CHECK(q.is_normal());

  const GroupTable s3g = load_group("sym:3");
  const auto s3 = subgroups(s3g);
  CHECK(s3.size() == 6);
  int nonnormal = 0;
  for (const auto& q : s3) nonnormal += !q.is_normal();
  CHECK(nonnormal == 3);

  const GroupTable q8 = load_group("quaternion");
  for (const auto& q : subgroups(q8)) CHECK(q.is_normal());
  CHECK(subgroups(load_group("elem2:3")).size() == 16);
  CHECK(index_two_subgroups(load_group("elem2:2")).size() == 3);
}

TEST_CASE("double cosets of an order-2 subgroup of S3") {
  const GroupTable s3 = load_group("sym:3");
  const Subgroup q = testing::find_subgroup(s3, 2, false);
  const DoubleCosetDecomposition d = double_cosets(s3, q);
  REQUIRE(d.ell() == 2);
  CHECK(popcount(d.classes[0].elements) == 2);
  CHECK(d.classes[0].b() == 1);
  CHECK(popcount(d.classes[1].elements) == 4);
  CHECK(d.classes[1].b() == 2);
  CHECK(d.self_paired.size() == 2);
  CHECK(d.paired.empty());
}

TEST_CASE("double cosets of the extreme subgroups") {
  const GroupTable g = load_group("dihedral:5");
  const auto whole = double_cosets(g, Subgroup::whole(g));
  CHECK(whole.ell() == 1);
  CHECK(whole.classes[0].b() == 1);
  const auto triv = double_cosets(g, Subgroup::trivial(g));
  CHECK(triv.ell() == 10);
  for (const auto& c : triv.classes) CHECK(popcount(c.elements) == 1);
}

TEST_CASE("quotients") {
  const GroupTable c4 = load_group("cyclic:4");
  const Quotient a = quotient(c4, testing::find_subgroup(c4, 2, true));
  CHECK(a.table.order() == 2);

  const GroupTable q8 = load_group("quaternion");
  const Quotient b = quotient(q8, testing::find_subgroup(q8, 2, true));
  CHECK(b.table.order() == 4);
  CHECK(b.table.exponent() == 2);

  const GroupTable s3 = load_group("sym:3");
  const Quotient c = quotient(s3, testing::find_subgroup(s3, 3, true));
  CHECK(c.table.order() == 2);
  CHECK_THROWS_AS(quotient(s3, testing::find_subgroup(s3, 2, false)), Error);
}

TEST_CASE("table automorphisms") {
  CHECK(table_automorphisms(load_group("cyclic:5")).size() == 4);
  CHECK(table_automorphisms(load_group("elem2:2")).size() == 6);
  CHECK(table_automorphisms(load_group("sym:3")).size() == 6);
  CHECK(table_automorphisms(load_group("quaternion")).size() == 24);
}
