#pragma once

#include <stdexcept>

#include "grr/subgroup.hpp"

namespace testing {

/// First subgroup matching both order and normality.
inline grr::Subgroup find_subgroup(const grr::GroupTable& g, int order, bool normal) {
  for (const auto& q : grr::subgroups(g))
    if (q.order() == order && q.is_normal() == normal) return q;
  throw std::runtime_error("no such subgroup");
}

inline int first_of_order(const grr::GroupTable& g, int order, grr::Mask avoid = 0) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == order && !((avoid >> x) & 1)) return x;
  throw std::runtime_error("no such element");
}

}  // namespace testing
