#pragma once

#include "grr/group_table.hpp"

namespace grr {

/// Membership of a group in the families that admit no GRR.
struct Classification {
  bool abelian = false;
  int exponent = 1;
  bool elementary_abelian_2 = false;
  bool abelian_exp_gt2 = false;
  /// Non-abelian, with an abelian index-2 subgroup A and an order-4 element
  /// x outside A inverting every element of A by conjugation.
  bool generalized_dicyclic = false;
  /// Q8 x C2^m: a non-abelian 2-group with every subgroup normal.
  bool hamiltonian_2group = false;
  bool grr_family_excluded = false;
};

Classification classify(const GroupTable& g);

struct InvolutionFraction {
  int involutions = 0;  // elements of order at most 2
  int order = 1;
  bool must_be_ea2 = false;  // involutions / order > 3/4
  bool is_ea2 = false;
};

/// Throws ProofViolation if the fraction exceeds 3/4 but the group is not
/// elementary abelian of exponent 2.
InvolutionFraction involution_fraction_check(const GroupTable& g);

}  // namespace grr
