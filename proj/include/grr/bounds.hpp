#pragma once

#include <string>

namespace grr {

/// Exponents of the asymptotic proportion bounds at one group order. Each
/// proportion bound reads 1 - 2^exponent; it says nothing (vacuous) when the
/// exponent is >= 0, i.e. when the implied count bound 2^(cR + exponent)
/// reaches the 2^cR total.
struct BoundTable {
  long double r = 0;
  long double c_r = 0;
  long double log2_r = 0;
  /// r^0.499 / (8 log2^3 r)
  long double decay = 0;
  long double grr_exponent = 0;       // -decay + log2^2 r + 3
  long double unlabeled_exponent = 0; // -decay + 2 log2^2 r + 3
  long double normal_exponent = 0;    // -decay + log2^2 r + 3
  long double aut_bound_exponent = 0; // a(r) = log2^2 r, |Aut(R)| <= 2^a(r)
  long double b_r = 0;                // decay - log2^2 r - 3
  long double grr_count_exponent = 0; // cR + grr_exponent
  bool grr_vacuous = false;
  bool unlabeled_vacuous = false;
  bool normal_vacuous = false;
};

/// Throws unless r >= 3.
BoundTable bound_evaluator(long double r, long double c_r);

/// Parses "N" or "2^K".
long double parse_order(const std::string& s);

/// Advisory exponent c(R) - r / (192 |N|) + log2^2 r + 3.
long double stabilized_orbit_exponent(long double r, long double c_r, long double n_order);

}  // namespace grr
