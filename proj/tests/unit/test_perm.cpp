#include <doctest.h>

#include "grr/perm_algorithms.hpp"
#include "helpers.hpp"

using namespace grr;

namespace {

Permutation cycle(int n, std::initializer_list<int> c) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::vector<int> pts(c);
  for (std::size_t i = 0; i < pts.size(); ++i) img[pts[i]] = pts[(i + 1) % pts.size()];
  return Permutation(img);
}

PermGroup klein_regular() {
  return PermGroup(4, {cycle(4, {0, 1}) * cycle(4, {2, 3}), cycle(4, {0, 2}) * cycle(4, {1, 3})});
}

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation p = Permutation::parse("1 2 0 3");
  CHECK(p(0) == 1);
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.to_cycles() == "(0 1 2)");
  CHECK(p.to_line() == "1 2 0 3");
  // p * q applies p first.
  const Permutation q = cycle(4, {0, 3});
  CHECK((p * q)(2) == q(p(2)));
  CHECK(p.apply(bit(0) | bit(3)) == (bit(1) | bit(3)));
  CHECK_THROWS_AS(Permutation::parse("0 0 1"), Error);
}

TEST_CASE("group orders and membership") {
  const PermGroup s4(4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})});
  CHECK(s4.order() == 24);
  CHECK(PermGroup::trivial(5).order() == 1);
  CHECK(s4.contains(cycle(4, {0, 1})));
  CHECK(s4.elements().size() == 24);
  CHECK(PermGroup::symmetric(12).order() == BigInt(479001600));
  const PermGroup c = PermGroup(4, {cycle(4, {0, 1, 2, 3})});
  CHECK_FALSE(c.contains(cycle(4, {0, 1})));
}

TEST_CASE("rank and unrank are inverse") {
  const PermGroup s4 = PermGroup::symmetric(4);
  for (long long k = 0; k < 24; ++k) CHECK(s4.rank(s4.unrank(k)) == k);
}

TEST_CASE("point stabilizers") {
  CHECK(PermGroup::symmetric(4).point_stabilizer(0).order() == 6);
  CHECK(regular_rep(load_group("dihedral:4")).point_stabilizer(0).is_trivial());
  CHECK(PermGroup(4, {cycle(4, {0, 1}) * cycle(4, {2, 3})}).point_stabilizer(0).is_trivial());
  CHECK(PermGroup::symmetric(5).point_stabilizer(3).order() == 24);
}

TEST_CASE("regular representations") {
  const PermGroup c3 = regular_rep(load_group("cyclic:3"));
  CHECK(c3.order() == 3);
  CHECK(c3.generators().size() == 1);
  const PermGroup s3 = regular_rep(load_group("sym:3"));
  CHECK(s3.order() == 6);
  CHECK(s3.degree() == 6);
  CHECK(s3.point_stabilizer(0).is_trivial());
}

TEST_CASE("orbits and blocks") {
  const Partition o = orbits(PermGroup(5, {cycle(5, {0, 1, 2})}));
  REQUIRE(o.size() == 3);
  CHECK(o[0] == 0b00111);
  CHECK(o[1] == 0b01000);
  CHECK(o[2] == 0b10000);

  const GroupTable s3 = load_group("sym:3");
  const PermGroup reg = regular_rep(s3);
  const Subgroup q = testing::find_subgroup(s3, 2, false);
  CHECK(blocks_check(reg, q.right_cosets()));
  Partition singletons;
  for (int x = 0; x < 6; ++x) singletons.push_back(bit(x));
  CHECK(blocks_check(reg, singletons));
  CHECK_THROWS_AS(blocks_check(reg, {1, 2}), Error);
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(PermGroup::symmetric(4)));
  CHECK_FALSE(is_primitive(regular_rep(load_group("cyclic:4"))));
  CHECK(is_primitive(regular_rep(load_group("cyclic:5"))));
  CHECK_THROWS_AS(is_primitive(PermGroup(5, {cycle(5, {0, 1})})), Error);
}

TEST_CASE("cores") {
  const PermGroup reg = regular_rep(load_group("sym:3"));
  CHECK(core_of(reg, reg).same_group(reg));
  CHECK(core_of(PermGroup::symmetric(4), klein_regular()).same_group(klein_regular()));
  CHECK(core_of(PermGroup::symmetric(6), reg).is_trivial());
}

TEST_CASE("maximal subgroups") {
  const PermGroup s4 = PermGroup::symmetric(4);
  const PermGroup a4(4, {cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})});
  const Maximality m = is_maximal_subgroup(s4, a4);
  CHECK(m.maximal);
  CHECK_FALSE(m.degenerate);
  CHECK_FALSE(is_maximal_subgroup(s4, PermGroup(4, {cycle(4, {0, 1})})).maximal);
  const Maximality d = is_maximal_subgroup(s4, s4);
  CHECK(d.maximal);
  CHECK(d.degenerate);
}

TEST_CASE("inversion permutations") {
  CHECK(inversion_perm(load_group("elem2:3")).is_identity());
  CHECK(inversion_perm(load_group("cyclic:4")).to_cycles() == "(1 3)");
  const GroupTable s3 = load_group("sym:3");
  const Permutation i = inversion_perm(s3);
  int fixed = 0;
  for (int x = 0; x < 6; ++x) fixed += i(x) == x;
  CHECK(fixed == 4);
}

TEST_CASE("joint orbit counts") {
  const Permutation iota = inversion_perm(load_group("cyclic:4"));
  CHECK(joint_orbit_count(PermGroup::trivial(4), iota) == 3);
  CHECK(joint_orbit_count(PermGroup::symmetric(6).point_stabilizer(0), Permutation::identity(6)) == 2);
  CHECK(joint_orbit_count(PermGroup::trivial(7), Permutation::identity(7)) == 7);
}

TEST_CASE("normal orbit dichotomy") {
  // Regular C3 is maximal in Sym(3).
  const GroupTable c3 = load_group("cyclic:3");
  const PermGroup s3 = PermGroup::symmetric(3);
  const DichotomyReport triv = normal_orbit_dichotomy_check(s3, c3, PermGroup::trivial(3));
  CHECK(triv.holds);
  CHECK(triv.branch == "L <= R");
  const DichotomyReport whole = normal_orbit_dichotomy_check(s3, c3, s3);
  CHECK(whole.holds);
  CHECK(whole.orbit_of_identity == c3.all());
  CHECK(whole.branch == "orbits stabilized");

  // Regular Klein four inside Sym(4) with L = A4: holds, Klein is not maximal.
  const GroupTable k = load_group("elem2:2");
  const PermGroup a4(4, {cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})});
  const PermGroup s4 = PermGroup::symmetric(4);
  REQUIRE(regular_rep(k).is_subgroup_of(s4));
  const DichotomyReport r = normal_orbit_dichotomy_check(s4, k, a4);
  CHECK(r.holds);
  CHECK(r.l_normal);
  CHECK(r.branch == "precondition-failed");
}

TEST_CASE("normal closures") {
  const PermGroup s4 = PermGroup::symmetric(4);
  const PermGroup t(4, {cycle(4, {0, 1})});
  CHECK(normal_closure(s4, t).order() == 24);
  const PermGroup dbl(4, {cycle(4, {0, 1}) * cycle(4, {2, 3})});
  CHECK(normal_closure(s4, dbl).order() == 4);
}

TEST_CASE("serialization round trip") {
  const PermGroup g = PermGroup::symmetric(5);
  CHECK(parse_perm_group(5, serialize(g)).same_group(g));
}
