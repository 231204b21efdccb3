#include "grr/element_set.hpp"

#include <sstream>

namespace grr {

std::string to_string(HalfInt h) {
  if (h.twice % 2 == 0) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

ElementSet ElementSet::of(const GroupTable& g, std::initializer_list<int> elems) {
  Mask m = 0;
  for (int x : elems) {
    if (x < 0 || x >= g.order()) throw Error("element " + std::to_string(x) + " not in " + g.name());
    m |= bit(x);
  }
  return {g, m};
}

int ElementSet::involution_count() const { return popcount(involution_mask(*owner_, bits_)); }

ElementSet ElementSet::inverse() const { return {*owner_, inverse_mask(*owner_, bits_)}; }

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  for_each_bit(bits_, [&](int x) { out.push_back(x); });
  return out;
}

Mask inverse_mask(const GroupTable& g, Mask m) {
  Mask out = 0;
  for_each_bit(m, [&](int x) { out |= bit(g.inv(x)); });
  return out;
}

Mask involution_mask(const GroupTable& g, Mask m) {
  Mask out = 0;
  for_each_bit(m, [&](int x) {
    if (g.squares_to_identity(x)) out |= bit(x);
  });
  return out;
}

std::vector<Mask> inverse_closed_atoms(const GroupTable& g, Mask x) {
  if (inverse_mask(g, x) != x) throw Error("set " + format_elements(x) + " is not inverse-closed");
  std::vector<Mask> atoms;
  Mask left = x;
  while (left) {
    const int y = lowest(left);
    const Mask atom = bit(y) | bit(g.inv(y));
    atoms.push_back(atom);
    left &= ~atom;
  }
  return atoms;
}

std::string format_elements(Mask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each_bit(m, [&](int x) {
    os << (first ? "" : ",") << x;
    first = false;
  });
  os << '}';
  return os.str();
}

}  // namespace grr
