#include "grr/perm_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <utility>

#include "grr/subgroup.hpp"

namespace grr {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  Partition classes(int n) {
    std::vector<Mask> by_root(n, 0);
    for (int x = 0; x < n; ++x) by_root[find(x)] |= bit(x);
    Partition out;
    for (Mask m : by_root)
      if (m) out.push_back(m);
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) { return lowest(a) < lowest(b); });
    return out;
  }
};

void require_transitive(const PermGroup& g) {
  if (!g.is_transitive()) throw Error("group is not transitive");
}

}  // namespace

Permutation translation(const GroupTable& g, int elem) {
  return Permutation(g.right_translation(elem));
}

PermGroup regular_rep(const GroupTable& g) {
  std::vector<Permutation> gens;
  for (int x : g.generators()) gens.push_back(translation(g, x));
  PermGroup p(g.order(), std::move(gens));
  if (p.order() != g.order() || !p.point_stabilizer(0).is_trivial())
    throw ProofViolation("regular representation of " + g.name() + " is not regular");
  return p;
}

Partition orbits_of(int degree, const std::vector<Permutation>& gens) {
  UnionFind uf(degree);
  for (const auto& s : gens)
    for (int x = 0; x < degree; ++x) uf.unite(x, s(x));
  return uf.classes(degree);
}

Partition orbits(const PermGroup& g) { return orbits_of(g.degree(), g.generators()); }

bool blocks_check(const PermGroup& g, const Partition& parts) {
  require_transitive(g);
  Mask seen = 0;
  for (Mask p : parts) {
    if (!p || (seen & p)) throw Error("parts do not form a partition");
    seen |= p;
  }
  if (seen != low_bits(g.degree())) throw Error("parts do not cover the points");
  for (const auto& s : g.generators())
    for (Mask p : parts)
      if (std::find(parts.begin(), parts.end(), s.apply(p)) == parts.end()) return false;
  return true;
}

Partition minimal_block_system(const PermGroup& g, int p) {
  const int n = g.degree();
  UnionFind uf(n);
  std::deque<std::pair<int, int>> work;
  if (uf.unite(0, p)) work.emplace_back(0, p);
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    for (const auto& s : g.generators())
      if (uf.unite(s(a), s(b))) work.emplace_back(s(a), s(b));
  }
  return uf.classes(n);
}

bool is_primitive(const PermGroup& g) {
  require_transitive(g);
  for (int p = 1; p < g.degree(); ++p)
    if (minimal_block_system(g, p).size() > 1) return false;
  return true;
}

bool is_normal_in(const PermGroup& g, const PermGroup& l) {
  for (const auto& t : g.generators()) {
    const Permutation ti = t.inverse();
    for (const auto& x : l.generators())
      if (!l.contains(ti * x * t)) return false;
  }
  return true;
}

PermGroup core_of(const PermGroup& g, const PermGroup& r_sub) {
  if (!r_sub.is_subgroup_of(g)) throw Error("core_of: r_sub is not a subgroup of g");
  // x lies in the core iff its whole G-conjugacy class stays inside r_sub.
  std::vector<Permutation> core_gens;
  PermGroup core = PermGroup::trivial(g.degree());
  for (const auto& x : r_sub.elements()) {
    if (core.contains(x)) continue;
    std::vector<Permutation> cls{x};
    bool inside = true;
    for (std::size_t k = 0; k < cls.size() && inside; ++k)
      for (const auto& t : g.generators()) {
        Permutation c = t.inverse() * cls[k] * t;
        if (!r_sub.contains(c)) {
          inside = false;
          break;
        }
        if (std::find(cls.begin(), cls.end(), c) == cls.end()) cls.push_back(std::move(c));
      }
    if (!inside) continue;
    core_gens.push_back(x);
    core = PermGroup(g.degree(), core_gens);
  }
  if (!is_normal_in(g, core) || !core.is_subgroup_of(r_sub))
    throw ProofViolation("computed core is not normal or not contained in r_sub");
  return core;
}

PermGroup normal_closure(const PermGroup& g, const PermGroup& l) {
  std::vector<Permutation> gens = l.generators();
  PermGroup cur(g.degree(), gens);
  bool grown = true;
  while (grown) {
    grown = false;
    const std::vector<Permutation> current = cur.generators();
    for (const auto& t : g.generators())
      for (const auto& x : current) {
        Permutation c = t.inverse() * x * t;
        if (cur.contains(c)) continue;
        gens.push_back(std::move(c));
        cur = PermGroup(g.degree(), gens);
        grown = true;
      }
  }
  return cur;
}

Maximality is_maximal_subgroup(const PermGroup& g, const PermGroup& r_sub) {
  if (!r_sub.is_subgroup_of(g)) throw Error("is_maximal_subgroup: r_sub is not a subgroup of g");
  const long long n = g.order_if_at_most(100000);
  if (n < 0) throw Error("is_maximal_subgroup: group of order " + to_string(g.order()) + " too large");
  if (r_sub.order() == g.order()) return {true, true};
  const std::vector<Permutation> rs = r_sub.elements();
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (long long k = 0; k < n; ++k) {
    if (done[k]) continue;
    const Permutation x = g.unrank(k);
    for (const auto& a : rs)
      for (const auto& b : rs) done[g.rank(a * x * b)] = true;
    if (r_sub.contains(x)) continue;
    std::vector<Permutation> gens = r_sub.generators();
    gens.push_back(x);
    if (PermGroup(g.degree(), std::move(gens)).order() != g.order()) return {false, false};
  }
  return {true, false};
}

Permutation inversion_perm(const GroupTable& g) {
  std::vector<int> v(g.order());
  for (int x = 0; x < g.order(); ++x) v[x] = g.inv(x);
  Permutation p(v);
  if (!(p * p).is_identity()) throw ProofViolation("inversion is not an involution");
  return p;
}

int joint_orbit_count(const PermGroup& g1, const Permutation& iota) {
  if (iota.degree() != g1.degree()) throw Error("joint_orbit_count: degree mismatch");
  std::vector<Permutation> gens = g1.generators();
  gens.push_back(iota);
  return static_cast<int>(orbits_of(g1.degree(), gens).size());
}

DichotomyReport normal_orbit_dichotomy_check(const PermGroup& g, const GroupTable& table,
                                             const PermGroup& l_sub, std::optional<Maximality> known) {
  DichotomyReport rep;
  const PermGroup r = regular_rep(table);
  if (!r.is_subgroup_of(g)) throw Error("dichotomy: the regular representation is not inside g");
  const Maximality m = known ? *known : is_maximal_subgroup(g, r);
  rep.maximal = m.maximal && !m.degenerate;
  rep.degenerate = m.degenerate;
  rep.l_normal = l_sub.is_subgroup_of(g) && is_normal_in(g, l_sub);

  std::vector<int> orb = l_sub.orbit(0);
  for (int x : orb) rep.orbit_of_identity |= bit(x);
  rep.orbit_is_subgroup = subgroup_closure(table, rep.orbit_of_identity) == rep.orbit_of_identity;
  if (rep.orbit_is_subgroup) rep.orbit_is_normal = Subgroup(table, rep.orbit_of_identity).is_normal();
  rep.l_in_r = l_sub.is_subgroup_of(r);
  const Partition lorbs = orbits(l_sub);
  rep.orbits_stabilized = true;
  const PermGroup g1 = g.point_stabilizer(0);
  for (const auto& s : g1.generators())
    for (Mask o : lorbs) rep.orbits_stabilized = rep.orbits_stabilized && s.apply(o) == o;

  rep.holds = rep.orbit_is_subgroup && (!rep.orbit_is_normal || rep.l_in_r || rep.orbits_stabilized);
  if (!rep.maximal || !rep.l_normal)
    rep.branch = "precondition-failed";
  else if (!rep.orbit_is_normal)
    rep.branch = "orbit not normal";
  else if (rep.l_in_r)
    rep.branch = "L <= R";
  else if (rep.orbits_stabilized)
    rep.branch = "orbits stabilized";
  else
    rep.branch = "none";
  return rep;
}

}  // namespace grr
