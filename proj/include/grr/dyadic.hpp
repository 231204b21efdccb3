#pragma once

#include <string>

#include "grr/types.hpp"

namespace grr {

/// count <= 2^(num/den), decided exactly as count^den <= 2^num.
bool within_power_of_two(const BigInt& count, long long num, long long den);

/// One exact bound comparison: count against 2^(bound_num / bound_den).
struct Verdict {
  std::string name;
  BigInt count;
  long long bound_num = 0;
  long long bound_den = 1;
  bool holds = false;
};

Verdict make_verdict(std::string name, const BigInt& count, long long num, long long den);

BigInt pow2(long long e);
BigInt binomial(int n, int k);

}  // namespace grr
