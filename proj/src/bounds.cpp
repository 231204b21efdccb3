#include "grr/bounds.hpp"

#include <cmath>

#include "grr/types.hpp"

namespace grr {

BoundTable bound_evaluator(long double r, long double c_r) {
  if (!(r >= 3)) throw Error("bound_evaluator needs r >= 3");
  BoundTable t;
  t.r = r;
  t.c_r = c_r;
  t.log2_r = std::log2(r);
  const long double l2 = t.log2_r * t.log2_r;
  t.decay = std::pow(r, 0.499L) / (8 * l2 * t.log2_r);
  t.grr_exponent = -t.decay + l2 + 3;
  t.unlabeled_exponent = -t.decay + 2 * l2 + 3;
  t.normal_exponent = t.grr_exponent;
  t.aut_bound_exponent = l2;
  t.b_r = t.decay - l2 - 3;
  t.grr_count_exponent = c_r + t.grr_exponent;
  t.grr_vacuous = t.grr_exponent >= 0;
  t.unlabeled_vacuous = t.unlabeled_exponent >= 0;
  t.normal_vacuous = t.normal_exponent >= 0;
  return t;
}

long double parse_order(const std::string& s) {
  try {
    std::size_t used = 0;
    if (s.rfind("2^", 0) == 0) {
      const long double k = std::stold(s.substr(2), &used);
      if (used == s.size() - 2) return std::exp2(k);
    } else {
      const long double v = std::stold(s, &used);
      if (used == s.size()) return v;
    }
  } catch (const std::exception&) {
  }
  throw Error("bad order '" + s + "'");
}

long double stabilized_orbit_exponent(long double r, long double c_r, long double n_order) {
  const long double l = std::log2(r);
  return c_r - r / (192 * n_order) + l * l + 3;
}

}  // namespace grr
