#include "grr/classify.hpp"

#include "grr/element_set.hpp"
#include "grr/subgroup.hpp"

namespace grr {

namespace {

bool is_generalized_dicyclic(const GroupTable& g) {
  for (const Subgroup& a : index_two_subgroups(g)) {
    bool abelian = true;
    for_each_bit(a.mask(), [&](int x) {
      for_each_bit(a.mask(), [&](int y) { abelian = abelian && g.mul(x, y) == g.mul(y, x); });
    });
    if (!abelian) continue;
    for (int x = 0; x < g.order(); ++x) {
      if (a.contains(x) || g.element_order(x) != 4) continue;
      bool inverts = true;
      for_each_bit(a.mask(), [&](int y) {
        inverts = inverts && g.mul(g.mul(g.inv(x), y), x) == g.inv(y);
      });
      if (inverts) return true;
    }
  }
  return false;
}

// Every cyclic subgroup normal implies every subgroup normal.
bool every_subgroup_normal(const GroupTable& g) {
  for (int x = 0; x < g.order(); ++x) {
    const Mask c = subgroup_closure(g, bit(x));
    for (int y = 0; y < g.order(); ++y)
      if (!(c & bit(g.mul(g.mul(g.inv(y), x), y)))) return false;
  }
  return true;
}

}  // namespace

Classification classify(const GroupTable& g) {
  Classification c;
  c.abelian = g.is_abelian();
  c.exponent = g.exponent();
  c.elementary_abelian_2 = c.exponent <= 2;
  c.abelian_exp_gt2 = c.abelian && c.exponent > 2;
  if (!c.abelian) {
    c.generalized_dicyclic = is_generalized_dicyclic(g);
    const int r = g.order();
    c.hamiltonian_2group = (r & (r - 1)) == 0 && every_subgroup_normal(g);
  }
  c.grr_family_excluded = c.abelian_exp_gt2 || c.generalized_dicyclic;
  return c;
}

InvolutionFraction involution_fraction_check(const GroupTable& g) {
  InvolutionFraction f;
  f.involutions = popcount(involution_mask(g, g.all()));
  f.order = g.order();
  f.must_be_ea2 = 4 * f.involutions > 3 * f.order;
  f.is_ea2 = f.involutions == f.order;
  if (f.must_be_ea2 && !f.is_ea2)
    throw ProofViolation(g.name() + ": involution fraction above 3/4 in a group that is not elementary abelian");
  return f;
}

}  // namespace grr
