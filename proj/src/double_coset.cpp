#include "grr/double_coset.hpp"

namespace grr {

std::vector<std::vector<Mask>> DoubleCosetClass::intersections(const GroupTable& g) const {
  const int n = b();
  std::vector<std::vector<Mask>> out(n, std::vector<Mask>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = intersection(g, i, j);
  return out;
}

DoubleCosetDecomposition double_cosets(const GroupTable& g, const Subgroup& q) {
  DoubleCosetDecomposition d;
  d.owner = &g;
  d.subgroup = q.mask();
  Mask left = g.all();
  while (left) {
    const int x = lowest(left);
    DoubleCosetClass cls;
    for_each_bit(q.right_coset(x), [&](int y) { cls.elements |= q.left_coset(y); });
    Mask rest = cls.elements;
    while (rest) {
      const Mask c = q.right_coset(lowest(rest));
      cls.right_cosets.push_back(c);
      rest &= ~c;
    }
    left &= ~cls.elements;
    d.classes.push_back(std::move(cls));
  }
  for (int i = 0; i < d.ell(); ++i) {
    const Mask inv = inverse_mask(g, d.classes[i].elements);
    if (inv == d.classes[i].elements) {
      d.self_paired.push_back(i);
      continue;
    }
    for (int j = i + 1; j < d.ell(); ++j)
      if (d.classes[j].elements == inv) d.paired.emplace_back(i, j);
  }
  return d;
}

}  // namespace grr
