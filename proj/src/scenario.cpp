#include "grr/scenario.hpp"

#include <algorithm>
#include <utility>

#include "grr/classify.hpp"
#include "grr/perm_algorithms.hpp"

namespace grr {

namespace {

int coset_index(const std::vector<Mask>& cosets, Mask m) {
  auto it = std::find(cosets.begin(), cosets.end(), m);
  if (it == cosets.end()) throw ProofViolation("core cosets are not blocks of the overgroup");
  return static_cast<int>(it - cosets.begin());
}

}  // namespace

OvergroupScenario make_scenario(const GroupTable& table, const PermGroup& g, std::string label) {
  const int r = table.order();
  if (g.degree() != r) throw Error("overgroup degree differs from the group order");
  const PermGroup reg = regular_rep(table);
  if (!reg.is_subgroup_of(g)) throw Error("overgroup does not contain the regular representation");

  PermGroup core = core_of(g, reg);
  Mask core_mask = 0;
  for (int x : core.orbit(0)) core_mask |= bit(x);
  Quotient q = quotient(table, Subgroup(table, core_mask));

  OvergroupScenario s{.group = &table,
                      .label = std::move(label),
                      .overgroup = g,
                      .core = std::move(core),
                      .core_mask = core_mask,
                      .quotient = std::move(q)};
  s.transitive = g.is_transitive();
  s.proper = g.order() > reg.order();
  const int qn = s.quotient.table.order();

  const PermGroup g1 = g.point_stabilizer(0);
  std::vector<Permutation> h_gens;
  for (const auto& p : g1.generators()) {
    std::vector<int> img(qn);
    for (int i = 0; i < qn; ++i) img[i] = coset_index(s.quotient.cosets, p.apply(s.quotient.cosets[i]));
    h_gens.emplace_back(img);
  }
  s.degenerate = std::all_of(h_gens.begin(), h_gens.end(), [](const Permutation& h) { return h.is_identity(); });

  const Permutation qiota = inversion_perm(s.quotient.table);
  for (Mask pts : orbits_of(qn, h_gens)) {
    HOrbit o;
    o.points = pts;
    for_each_bit(pts, [&](int i) {
      o.preimage |= s.quotient.cosets[i];
      o.cells.push_back(s.quotient.cosets[i]);
    });
    o.inverse_fixed = qiota.apply(pts) == pts;
    s.h_orbits.push_back(std::move(o));
  }
  std::vector<Permutation> joint = h_gens;
  joint.push_back(qiota);
  s.kappa = static_cast<int>(orbits_of(qn, joint).size());
  s.joint_orbits = joint_orbit_count(g1, inversion_perm(table));

  if (g.order_if_at_most(100000) >= 0) {
    const Maximality m = is_maximal_subgroup(g, reg);
    s.r_maximal = m.maximal && !m.degenerate;
  }
  s.quotient_grr_eligible = !classify(s.quotient.table).grr_family_excluded;
  s.group_grr_eligible = !classify(table).grr_family_excluded;
  return s;
}

}  // namespace grr
