#include "grr/dyadic.hpp"

#include <utility>

namespace grr {

BigInt pow2(long long e) {
  if (e < 0) throw Error("pow2 of a negative exponent");
  BigInt v = 1;
  v <<= static_cast<unsigned>(e);
  return v;
}

bool within_power_of_two(const BigInt& count, long long num, long long den) {
  if (den <= 0) throw Error("bound denominator must be positive");
  if (count < 0) throw Error("negative count");
  const BigInt lhs = boost::multiprecision::pow(count, static_cast<unsigned>(den));
  if (num >= 0) return lhs <= pow2(num);
  return lhs * pow2(-num) <= 1;
}

Verdict make_verdict(std::string name, const BigInt& count, long long num, long long den) {
  return {std::move(name), count, num, den, within_power_of_two(count, num, den)};
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt v = 1;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

}  // namespace grr
